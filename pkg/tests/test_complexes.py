"""Simplicial complex canonicalization, faces, and neighborhood complexes."""

import pytest

from nctopo import SimplicialComplex, boundary_of_simplex, circulant, neighborhood_complex
from nctopo.graphs import Graph, complete_graph, k44_minus_matching


class TestCanonicalization:
    def test_faces_of_larger_simplices_absorbed(self):
        k = SimplicialComplex([(0, 1, 2), (0, 1), (2,)])
        assert k.maximal_simplices == ((0, 1, 2),)

    def test_duplicates_and_orderings_merge(self):
        a = SimplicialComplex([(2, 1, 0), (0, 1, 2)])
        b = SimplicialComplex([(0, 1, 2)])
        assert a == b
        assert hash(a) == hash(b)

    def test_incomparable_simplices_kept(self):
        k = SimplicialComplex([(0, 1), (1, 2), (2, 0)])
        assert len(k.maximal_simplices) == 3

    def test_empty_input(self):
        k = SimplicialComplex([])
        assert k.maximal_simplices == ()
        assert k.dim() == -1
        assert k.f_vector() == ()


class TestFaceEnumeration:
    def test_solid_triangle_faces(self, solid_triangle):
        assert solid_triangle.faces(0) == ((0,), (1,), (2,))
        assert solid_triangle.faces(1) == ((0, 1), (0, 2), (1, 2))
        assert solid_triangle.faces(2) == ((0, 1, 2),)
        assert solid_triangle.faces(3) == ()
        assert solid_triangle.f_vector() == (3, 3, 1)
        assert solid_triangle.euler_characteristic() == 1

    def test_tetra_boundary(self, tetra_boundary):
        assert tetra_boundary.f_vector() == (4, 6, 4)
        assert tetra_boundary.euler_characteristic() == 2
        assert tetra_boundary.is_pure()
        assert tetra_boundary.dim() == 2

    def test_has_face(self, tetra_boundary):
        assert tetra_boundary.has_face((1, 3))
        assert tetra_boundary.has_face((2,))
        assert not tetra_boundary.has_face((0, 1, 2, 3))
        assert not tetra_boundary.has_face(())

    def test_mixed_dimensions_not_pure(self):
        k = SimplicialComplex([(0, 1, 2), (3, 4)])
        assert not k.is_pure()


class TestComponents:
    def test_split_and_order(self):
        k = SimplicialComplex([(5, 6), (0, 1, 2), (6, 7)])
        comps = k.components()
        assert len(comps) == 2
        assert comps[0].maximal_simplices == ((0, 1, 2),)
        assert set(comps[1].vertices()) == {5, 6, 7}

    def test_connected_single(self, tetra_boundary):
        assert len(tetra_boundary.components()) == 1


class TestJson:
    def test_round_trip(self, rp2):
        again = SimplicialComplex.from_json_obj(rp2.to_json_obj())
        assert again == rp2

    def test_vertex_mismatch_rejected(self):
        with pytest.raises(ValueError):
            SimplicialComplex.from_json_obj(
                {"vertices": [0, 1, 9], "maximal_simplices": [[0, 1]]}
            )


class TestBoundaryOfSimplex:
    def test_boundary_of_tetrahedron(self):
        k = boundary_of_simplex((0, 1, 2, 3))
        assert k.f_vector() == (4, 6, 4)

    def test_boundary_of_edge_is_two_points(self):
        k = boundary_of_simplex((0, 1))
        assert k.maximal_simplices == ((0,), (1,))

    def test_boundary_of_vertex_rejected(self):
        with pytest.raises(ValueError):
            boundary_of_simplex((0,))


class TestNeighborhoodComplex:
    def test_c10_1_3_has_ten_maximal_tetrahedra(self):
        k = neighborhood_complex(circulant(10, (1, 3)))
        assert len(k.maximal_simplices) == 10
        assert k.is_pure() and k.dim() == 3
        assert len(k.components()) == 2

    def test_neighborhoods_translate(self):
        # N(k) is N(0) shifted by k, so the maximal simplices form one
        # rotation orbit whenever they are pairwise distinct.
        k = neighborhood_complex(circulant(13, (2, 3)))
        base = set(k.maximal_simplices[0])
        orbit = {tuple(sorted((v + r) % 13 for v in base)) for r in range(13)}
        assert set(k.maximal_simplices) == orbit

    def test_complete_graph_gives_simplex_boundary(self):
        # N(v) in K_m is everything but v: the (m-1)-simplex boundary.
        k = neighborhood_complex(complete_graph(5))
        assert k == boundary_of_simplex((0, 1, 2, 3, 4))

    def test_k4(self):
        k = neighborhood_complex(complete_graph(4))
        assert k.f_vector() == (4, 6, 4)

    def test_duplicate_neighborhoods_merge(self):
        # C8(1,3) is K44: each side shares one neighborhood, so the
        # complex is two disjoint solid tetrahedra.
        k = neighborhood_complex(circulant(8, (1, 3)))
        assert k.maximal_simplices == ((0, 2, 4, 6), (1, 3, 5, 7))

    def test_k44_minus_matching_gives_two_tetra_boundaries(self):
        k = neighborhood_complex(k44_minus_matching())
        comps = k.components()
        assert len(comps) == 2
        assert all(c.f_vector() == (4, 6, 4) for c in comps)

    def test_isolated_vertex_contributes_nothing(self):
        g = Graph(3, [(0, 1)])
        k = neighborhood_complex(g)
        assert set(k.vertices()) == {0, 1}

    def test_cycle_neighborhoods(self):
        # In a 6-cycle the neighborhoods {i-1, i+1} form two triangles
        # of edges, one per parity class.
        k = neighborhood_complex(circulant(6, (1,)))
        assert k.dim() == 1
        assert len(k.components()) == 2
        assert k.f_vector() == (6, 6)
