"""Bounded-noise decentralized control benchmark bindings."""

from ._witbench import *  # noqa: F401,F403
