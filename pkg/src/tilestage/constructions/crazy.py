"""Placeholder; implemented later in the build."""


def gen_crazy_string(*args, **kwargs):
    raise NotImplementedError
