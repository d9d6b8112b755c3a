"""Placeholder; implemented later in the build."""


def gen_monotone(*args, **kwargs):
    raise NotImplementedError
