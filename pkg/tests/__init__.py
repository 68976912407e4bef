"""Unit test package for conway_skein."""
