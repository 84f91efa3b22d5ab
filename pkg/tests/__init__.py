"""Test configuration for SincPro Python Compiler."""
