"""Independent reference computations used by the tests."""
