"""Facet, tree-family and orbit file formats: round trips and parse errors."""

import pytest

from walkup import Complex, ParseError, catalog
from walkup.catalog import a541_tree_family, presentation
from walkup.construct import expand_orbit
from walkup import fileio


class TestFacetFormat:
    def test_round_trip_catalog_entries(self):
        for name in ("A5_21", "M4_41", "nonball_example", "S4_6"):
            K = catalog.get(name)
            assert fileio.parse_facets(fileio.format_facets(K)) == K

    def test_canonical_output_is_sorted_and_stable(self):
        K = Complex([(2, 1, 0), (0, 2, 3)])
        text = fileio.format_facets(K)
        assert text == "0 1 2\n0 2 3\n"
        assert fileio.format_facets(fileio.parse_facets(text)) == text

    def test_comments_and_blank_lines_skipped(self):
        text = "# a comment\n\n0 1 2\n# another\n1 2 3\n"
        K = fileio.parse_facets(text)
        assert K.facets == ((0, 1, 2), (1, 2, 3))

    def test_bad_token_reports_location(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_facets("0 1 2\n3 x 5\n")
        assert err.value.line == 2
        assert err.value.column == 3

    def test_negative_vertex_rejected(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_facets("0 -1 2\n")
        assert err.value.line == 1

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_facets("0 1 1\n")
        assert err.value.line == 1

    def test_mixed_dimension_rejected_with_line(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_facets("0 1 2\n0 1\n")
        assert err.value.line == 2

    def test_file_round_trip(self, tmp_path):
        K = catalog.get("B5_26")
        path = tmp_path / "b526.facets"
        fileio.save_facets(K, path)
        assert fileio.load_facets(path) == K

    def test_content_hash_sensitivity(self):
        a = fileio.content_hash(catalog.get("A5_21"))
        b = fileio.content_hash(catalog.get("B5_21"))
        assert a != b
        assert a == fileio.content_hash(catalog.get("A5_21"))


class TestTreeFamilyFormat:
    def test_round_trip_catalog_family(self):
        fam = a541_tree_family()
        text = fileio.format_tree_family(fam)
        back = fileio.parse_tree_family(text)
        assert back == fam
        assert fileio.format_tree_family(back) == text

    def test_header_validation(self):
        with pytest.raises(ParseError):
            fileio.parse_tree_family("5 41\ne 0 1\n")
        with pytest.raises(ParseError):
            fileio.parse_tree_family("")

    def test_unknown_tag(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_tree_family("1 2 3\nq 0 1\n")
        assert err.value.line == 2

    def test_missing_tree_indices(self):
        text = "1 3 3\ne 0 1\ne 1 2\ne 0 2\nt 0 0 1\nt 2 0 2\n"
        with pytest.raises(ParseError):
            fileio.parse_tree_family(text)

    def test_duplicate_tree_rejected(self):
        text = "1 2 3\ne 0 1\nt 0 0\nt 0 1\n"
        with pytest.raises(ParseError) as err:
            fileio.parse_tree_family(text)
        assert err.value.line == 4

    def test_small_family_round_trip(self):
        text = "1 3 3\ne 0 1\ne 1 2\ne 0 2\nt 0 0 1\nt 1 1 2\nt 2 0 2\n"
        fam = fileio.parse_tree_family(text)
        assert fam.dimension == 1 and fam.num_trees == 3
        assert fileio.parse_tree_family(fileio.format_tree_family(fam)) == fam


class TestOrbitFormat:
    def test_round_trip_catalog_presentations(self):
        for name in ("A5_21", "B5_21", "B5_26", "A5_41"):
            pres = presentation(name)
            text = fileio.format_orbit_presentation(pres)
            back = fileio.parse_orbit_presentation(text)
            assert back == pres
            assert expand_orbit(back) == catalog.get(name)

    def test_parse_simple(self):
        pres = fileio.parse_orbit_presentation("# demo\n3 a b\na0 a1 b2\n")
        assert pres.order == 3
        assert pres.classes == ("a", "b")
        assert pres.basic_facets == ((("a", 0), ("a", 1), ("b", 2)),)

    def test_bad_label(self):
        with pytest.raises(ParseError) as err:
            fileio.parse_orbit_presentation("3 a\na0 0a\n")
        assert err.value.line == 2

    def test_missing_header(self):
        with pytest.raises(ParseError):
            fileio.parse_orbit_presentation("# nothing\n")

    def test_out_of_range_index(self):
        with pytest.raises(ParseError):
            fileio.parse_orbit_presentation("3 a\na0 a5\n")
