"""hitlsim: human-in-the-loop alert pipeline simulator and evaluation toolkit."""

__version__ = "0.1.0"
__all__ = ["__version__"]
