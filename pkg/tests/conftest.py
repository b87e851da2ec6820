from __future__ import annotations

import functools

import pytest

from crverify import chartab, permgrp


@functools.lru_cache(maxsize=None)
def cached_group(spec: str) -> permgrp.PermGroup:
    return permgrp.group_from_spec(spec)


@functools.lru_cache(maxsize=None)
def cached_table(spec: str) -> chartab.CharacterTable:
    return chartab.dixon_character_table(cached_group(spec))


@pytest.fixture(scope="session")
def group():
    return cached_group


@pytest.fixture(scope="session")
def table():
    return cached_table
