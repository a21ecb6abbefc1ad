from . import resolvers

__all__ = []

resolvers
