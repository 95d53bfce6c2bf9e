"""Tests for rigid-quiver."""
