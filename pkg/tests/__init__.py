"""Tests for hitlsim."""
