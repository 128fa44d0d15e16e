"""Hypothesis strategies for group elements and free words."""

from __future__ import annotations

from hypothesis import strategies as st

from twocrossed.groups import FreeGroup, Group, free_reduce


def elements_of(group: Group) -> st.SearchStrategy:
    return st.sampled_from(group.elements())


def letters(rank: int) -> st.SearchStrategy[int]:
    return st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))


def raw_words(rank: int, max_size: int = 10) -> st.SearchStrategy[list[int]]:
    return st.lists(letters(rank), max_size=max_size)


def words(free: FreeGroup, max_size: int = 8) -> st.SearchStrategy[tuple]:
    return raw_words(free.rank, max_size).map(free_reduce)
