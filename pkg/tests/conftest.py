from hypothesis import settings

settings.register_profile("slow_ok", deadline=None)
settings.load_profile("slow_ok")
