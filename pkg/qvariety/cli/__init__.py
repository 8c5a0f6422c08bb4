"""Command line interface."""

from .root import cli
