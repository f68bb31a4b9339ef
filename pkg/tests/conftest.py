from hypothesis import HealthCheck, settings

# exact rational arithmetic makes individual examples slow but never flaky;
# wall-clock deadlines would only add noise
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
