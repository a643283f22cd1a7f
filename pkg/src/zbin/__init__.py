"""Finite groupoids, the box product on Bin(X), and locally-zero groupoids."""

from .center import (
    PairMask,
    SubtableKind,
    are_isomorphic,
    center_bruteforce,
    count_iso_classes,
    enumerate_locally_zero,
    from_mask,
    is_in_center_bruteforce,
    is_in_center_sampled,
    is_locally_zero,
    mask_box,
    subtable_kind,
    to_mask,
)
from .groupoid import (
    Groupoid,
    apply,
    box,
    constant_groupoid,
    left_zero,
    make_groupoid,
    max_groupoid,
    min_groupoid,
    right_zero,
)
from .linear import LinearCoeffs, compose, to_table

__version__ = "0.1.0"
