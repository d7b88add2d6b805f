"""ASRG command-line application."""

from pkgutil import extend_path

# apps/evals ships modules under the same package name.
__path__ = extend_path(__path__, __name__)
