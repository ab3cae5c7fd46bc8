import pytest

from invol.perms import NotAnInvolution, Permutation, all_involutions
from invol.paths import (
    InvalidPath,
    LabelOutOfRange,
    LabelledMotzkinPath,
    LabellingKind,
    NegativeHeight,
    NonzeroFinalHeight,
    ascii_drawing,
    enumerate_paths,
    involution_of_path,
    path_of_involution,
    reflect_path,
)

P = Permutation.parse

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634]
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152]


class TestValidation:
    def test_nonzero_final_height(self):
        with pytest.raises(NonzeroFinalHeight):
            LabelledMotzkinPath("UDU", (1,))

    def test_negative_height(self):
        with pytest.raises(NegativeHeight):
            LabelledMotzkinPath("DU", (1,))

    def test_label_above_height(self):
        with pytest.raises(LabelOutOfRange):
            LabelledMotzkinPath("UD", (2,))

    def test_label_below_one(self):
        with pytest.raises(LabelOutOfRange):
            LabelledMotzkinPath("UD", (0,))

    def test_valid_labelled(self):
        path = LabelledMotzkinPath("UUDD", (2, 1))
        assert path.down_heights() == (2, 1)

    def test_label_arity(self):
        with pytest.raises(InvalidPath):
            LabelledMotzkinPath("UD", ())

    def test_empty(self):
        with pytest.raises(InvalidPath):
            LabelledMotzkinPath("", ())

    def test_bad_characters(self):
        with pytest.raises(InvalidPath):
            LabelledMotzkinPath("UXD", (1,))


class TestTextFormat:
    def test_unitary_suppresses_labels(self):
        assert LabelledMotzkinPath.unitary("UUUDHDUDD").text() == "UUUDHDUDD"

    def test_nonunitary_shows_every_label(self):
        path = LabelledMotzkinPath("UUDUHUDDD", (2, 3, 2, 1))
        assert path.text() == "UUD[2]UHUD[3]D[2]D[1]"

    def test_parse_round_trip(self):
        for text in ["UUUDHDUDD", "UUD[2]UHUD[3]D[2]D[1]", "H", "UUDD"]:
            assert LabelledMotzkinPath.parse(text).text() == text

    def test_parse_default_label_is_one(self):
        assert LabelledMotzkinPath.parse("UUDD").labels == (1, 1)

    def test_labels_only_on_down_steps(self):
        with pytest.raises(InvalidPath):
            LabelledMotzkinPath.parse("U[2]D")


class TestEncode:
    def test_unitary_encoding(self):
        path = path_of_involution(P("468152937"))
        assert path.steps == "UUUDHDUDD"
        assert path.labels == (1, 1, 1, 1)

    def test_maximal_encoding(self):
        path = path_of_involution(P("932857641"))
        assert path.steps == "UUDUHUDDD"
        assert path.labels == (2, 3, 2, 1)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_identity(self, k):
        path = path_of_involution(Permutation.identity(k))
        assert path.steps == "H" * k
        assert path.labels == ()

    def test_rejects_non_involution(self):
        with pytest.raises(NotAnInvolution):
            path_of_involution(P("2314"))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_labels_match_crossing_formula(self, n):
        # label of the down step at M_j is one more than the number of
        # transpositions opened before m_j and closed after M_j
        for p in all_involutions(n):
            path = path_of_involution(p)
            trans = p.cycle_decomposition().transpositions
            expected = {}
            for m_j, big_j in trans:
                crossings = sum(1 for m, big in trans if m < m_j and big > big_j)
                expected[big_j] = crossings + 1
            assert path.label_map() == expected


class TestDecode:
    def test_insertion_example(self):
        assert involution_of_path(LabelledMotzkinPath.unitary("UUDHUDD")) == P("3614725")

    def test_pyramid(self):
        assert involution_of_path(LabelledMotzkinPath.unitary("UUUDDD")) == P("456123")

    def test_maximal_decoding(self):
        path = LabelledMotzkinPath("UUDUHUDDD", (2, 3, 2, 1))
        assert involution_of_path(path) == P("932857641")

    @pytest.mark.parametrize("n", range(1, 9))
    def test_round_trip_from_involutions(self, n):
        for p in all_involutions(n):
            assert involution_of_path(path_of_involution(p)) == p

    @pytest.mark.parametrize("n", range(1, 8))
    def test_round_trip_from_paths(self, n):
        for path in enumerate_paths(n):
            assert path_of_involution(involution_of_path(path)) == path


class TestLabellingKind:
    def test_unitary_example(self):
        assert path_of_involution(P("468152937")).kind() is LabellingKind.UNITARY

    def test_maximal_example(self):
        assert path_of_involution(P("932857641")).kind() is LabellingKind.MAXIMAL

    def test_all_ones_is_unitary_even_off_maximal(self):
        assert LabelledMotzkinPath("UUDD", (1, 1)).kind() is LabellingKind.UNITARY

    def test_other(self):
        assert LabelledMotzkinPath("UUUDDD", (1, 2, 1)).kind() is LabellingKind.OTHER

    def test_height_one_paths_are_both(self):
        # unitary and maximal coincide when every down step starts at height 1
        path = LabelledMotzkinPath.unitary("UDUD")
        assert path.kind() is LabellingKind.UNITARY
        assert path.labels == LabelledMotzkinPath.maximal("UDUD").labels


class TestIrreducibility:
    def test_pyramid(self):
        assert LabelledMotzkinPath.unitary("UUUDDD").is_irreducible()

    def test_two_arches(self):
        assert not LabelledMotzkinPath.unitary("UDUD").is_irreducible()

    def test_mixed_steps(self):
        assert LabelledMotzkinPath.unitary("UUUDHDUDD").is_irreducible()

    def test_single_horizontal(self):
        assert LabelledMotzkinPath.unitary("H").is_irreducible()
        assert not LabelledMotzkinPath.unitary("HH").is_irreducible()


class TestCharacterizations:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_unitary_iff_avoids_4321(self, n):
        pattern = P("4321")
        for p in all_involutions(n):
            unitary = path_of_involution(p).has_unitary_labels()
            assert unitary == (not p.contains(pattern))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_maximal_iff_avoids_3412(self, n):
        pattern = P("3412")
        for p in all_involutions(n):
            maximal = path_of_involution(p).has_maximal_labels()
            assert maximal == (not p.contains(pattern))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_321_needs_unitary_with_grounded_horizontals(self, n):
        pattern = P("321")
        for p in all_involutions(n):
            path = path_of_involution(p)
            grounded = all(
                h == 0 for h, c in zip(path.heights(), path.steps) if c == "H"
            )
            ok = path.kind() is LabellingKind.UNITARY and grounded
            assert ok == (not p.contains(pattern))


class TestEnumeration:
    def test_n3_unitary_golden_order(self):
        words = [p.steps for p in enumerate_paths(3, LabellingKind.UNITARY)]
        assert words == ["HHH", "HUD", "UDH", "UHD"]

    def test_n1_all(self):
        assert [p.steps for p in enumerate_paths(1)] == ["H"]

    def test_n4_all_counts_involutions(self):
        assert sum(1 for _ in enumerate_paths(4)) == 10

    @pytest.mark.parametrize("n", range(1, 12))
    def test_unitary_counts_are_motzkin(self, n):
        assert sum(1 for _ in enumerate_paths(n, LabellingKind.UNITARY)) == MOTZKIN[n]

    @pytest.mark.parametrize("n", range(1, 13))
    def test_all_labellings_count_involutions(self, n):
        assert sum(1 for _ in enumerate_paths(n)) == INVOLUTIONS[n]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_all_labellings_match_direct_generation(self, n):
        from_paths = {involution_of_path(q) for q in enumerate_paths(n)}
        direct = set(all_involutions(n))
        assert from_paths == direct

    def test_labels_enumerated_ascending(self):
        paths = [q for q in enumerate_paths(4) if q.steps == "UUDD"]
        assert [q.labels for q in paths] == [(1, 1), (2, 1)]

    def test_bad_length(self):
        with pytest.raises(ValueError):
            list(enumerate_paths(0))


class TestReflection:
    def test_unitary_reflection(self):
        reflected = reflect_path(path_of_involution(P("468152937")))
        assert reflected == path_of_involution(P("371859246"))
        assert reflected.steps == "UUDUHUDDD"
        assert reflected.kind() is LabellingKind.UNITARY

    def test_horizontal_runs_fixed(self):
        path = LabelledMotzkinPath.unitary("HHH")
        assert reflect_path(path) == path

    def test_symmetric_shape(self):
        path = LabelledMotzkinPath.unitary("UUDD")
        assert reflect_path(path) == path

    def test_maximal_reflects_to_maximal(self):
        reflected = reflect_path(path_of_involution(P("932857641")))
        assert reflected == path_of_involution(P("964352871"))
        assert reflected.kind() is LabellingKind.MAXIMAL

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_reverse_complement(self, n):
        for p in all_involutions(n):
            assert reflect_path(path_of_involution(p)) == path_of_involution(
                p.reverse_complement()
            )

    @pytest.mark.parametrize("n", range(1, 9))
    def test_reverses_steps(self, n):
        swap = {"U": "D", "H": "H", "D": "U"}
        for p in all_involutions(n):
            path = path_of_involution(p)
            reflected = reflect_path(path)
            assert reflected.steps == "".join(swap[c] for c in reversed(path.steps))


class TestDrawing:
    def test_small_mountain(self):
        drawing = ascii_drawing(LabelledMotzkinPath.unitary("UUDHUDD"))
        assert drawing == " /\\_/\\\n/     \\"

    def test_labels_line_for_nonunitary(self):
        drawing = ascii_drawing(LabelledMotzkinPath("UUDUHUDDD", (2, 3, 2, 1)))
        assert drawing.splitlines() == [
            "    _/\\",
            " /\\/   \\",
            "/       \\",
            "  2   321",
        ]
