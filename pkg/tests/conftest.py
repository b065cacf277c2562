from hypothesis import HealthCheck, settings

# mpmath-backed properties can blow past the default 200 ms deadline on a
# cold cache; correctness here never depends on wall time.
settings.register_profile(
    "quadstab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("quadstab")
