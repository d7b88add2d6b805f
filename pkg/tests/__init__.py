"""Test suite for the ASRG toolkit."""
