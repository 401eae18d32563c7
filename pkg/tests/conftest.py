from hypothesis import HealthCheck, settings

settings.register_profile(
    "patavoid",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("patavoid")
