import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_RINGS = ["Z/1", "F2", "F3", "F4", "F5", "Z/4", "Z/6", "F2[e]", "F3[e]", "F2 x F2"]
TEST_RINGS = SMALL_RINGS + ["M2(F2)"]
