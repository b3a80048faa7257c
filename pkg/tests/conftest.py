from hypothesis import HealthCheck, settings

# exact rational arithmetic makes some examples slow; keep runs reproducible
settings.register_profile("default", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")
