"""Placeholder; implemented later in the build."""


def gen_simulation(*args, **kwargs):
    raise NotImplementedError
