"""Test module. Auto pytest that can be started in IDE or with::

    python -m pytest

in terminal in the project root.
"""
