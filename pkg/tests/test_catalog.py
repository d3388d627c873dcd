"""The recomputed table of known values."""

from framings.catalog import build_catalog


def test_every_entry_recomputes_to_its_expected_value():
    failures = [(e.key, e.value, e.expected) for e in build_catalog() if not e.ok]
    assert failures == []


def test_keys_are_unique():
    keys = [e.key for e in build_catalog()]
    assert len(keys) == len(set(keys))


def test_catalog_covers_the_headline_manifolds():
    keys = {e.key for e in build_catalog()}
    for prefix in ("s3.", "so3.", "t3.", "quotient.", "surgery.", "bundle.",
                   "canonical.", "two_framing."):
        assert any(k.startswith(prefix) for k in keys), prefix
