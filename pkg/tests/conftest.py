from hypothesis import settings

settings.register_profile("pkg", deadline=None)
settings.load_profile("pkg")
