"""Unit tests for hitlsim."""
