"""Helpers shared by the application and the command line."""
