#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "z2skel/faces.hpp"
#include "z2skel/generators.hpp"

using namespace z2skel;

namespace {

std::vector<int> edge_ids(const ColoredSkeleton& s, std::initializer_list<const char*> ids) {
    std::vector<int> out;
    for (const char* id : ids) {
        int e = s.edge_index(id);
        REQUIRE(e >= 0);
        out.push_back(e);
    }
    return out;
}

std::map<int, long long> face_counts(const ColoredSkeleton& s, int level) {
    std::map<int, long long> counts;
    for (int d = 0; d <= s.n; ++d) counts[d] = (long long)enumerate_faces(s, d, level).size();
    return counts;
}

}  // namespace

TEST_CASE("vertices and edges are faces") {
    auto k4 = gen_simplex(3);
    auto v = is_face(k4, {0}, {});
    CHECK(v.ok);
    CHECK(v.face.dim == 0);
    CHECK(v.face.span.rank() == 0);

    int e = k4.edge_index("0-1");
    auto f = is_face(k4, {k4.edges[e].u, k4.edges[e].v}, {e});
    CHECK(f.ok);
    CHECK(f.face.dim == 1);
    CHECK(f.face.span.rank() == 1);

    // two isolated vertices are not connected, hence not a face
    CHECK(!is_face(k4, {0, 1}, {}).ok);
}

TEST_CASE("triangle of the simplex is a 2-face with span {r1,r2}") {
    auto k4 = gen_simplex(3);
    auto es = edge_ids(k4, {"0-1", "0-2", "1-2"});
    auto chk = is_face(k4, {k4.vertex_index("0"), k4.vertex_index("1"), k4.vertex_index("2")},
                       es);
    CHECK(chk.ok);
    CHECK(chk.face.dim == 2);
    CHECK(chk.face.span == span({GF2Vector::parse("100"), GF2Vector::parse("010")}, 3));
}

TEST_CASE("extend_face examples") {
    auto k4 = gen_simplex(3);
    int p = k4.vertex_index("0");
    auto tri = extend_face(k4, p, edge_ids(k4, {"0-1", "0-2"}));
    REQUIRE(tri.face.has_value());
    CHECK(tri.face->dim == 2);
    CHECK(tri.face->vertices ==
          std::vector<int>{k4.vertex_index("0"), k4.vertex_index("1"), k4.vertex_index("2")});

    auto q4 = gen_cube(4);
    int origin = q4.vertex_index("0000");
    auto square = extend_face(q4, origin, edge_ids(q4, {"0000:1", "0000:2"}));
    REQUIRE(square.face.has_value());
    CHECK(square.face->dim == 2);
    std::vector<int> expect = {q4.vertex_index("0000"), q4.vertex_index("1000"),
                               q4.vertex_index("0100"), q4.vertex_index("1100")};
    std::sort(expect.begin(), expect.end());
    CHECK(square.face->vertices == expect);

    // a single edge extends to itself
    auto one = extend_face(q4, origin, edge_ids(q4, {"0000:3"}));
    REQUIRE(one.face.has_value());
    CHECK(one.face->dim == 1);
    CHECK(one.face->edges == edge_ids(q4, {"0000:3"}));

    // the full star extends to the whole connected skeleton
    auto whole = extend_face(q4, origin, q4.star[origin]);
    REQUIRE(whole.face.has_value());
    CHECK(whole.face->dim == 4);
    CHECK((int)whole.face->vertices.size() == q4.vertex_count());
    CHECK((int)whole.face->edges.size() == (int)q4.edges.size());
}

TEST_CASE("extend_face rejects bad seeds") {
    auto k4 = gen_simplex(3);
    CHECK_THROWS_AS(extend_face(k4, k4.vertex_index("0"), edge_ids(k4, {"1-2"})), Error);
    CHECK_THROWS_AS(extend_face(k4, k4.vertex_index("0"), {}), Error);
    int e = k4.edge_index("0-1");
    CHECK_THROWS_AS(extend_face(k4, k4.vertex_index("0"), {e, e}), Error);  // repeated seed
    CHECK_THROWS_AS(extend_face(k4, k4.vertex_index("0"), {0, 1, 2, 3}), Error);  // m > n
}

TEST_CASE("face counts of the 4-simplex and 4-cube") {
    auto k5 = gen_simplex(4);
    auto lk5 = validate(k5).independence_level;
    auto counts5 = face_counts(k5, lk5);
    CHECK(counts5[0] == 5);
    CHECK(counts5[1] == 10);
    CHECK(counts5[2] == 10);
    CHECK(counts5[3] == 5);
    CHECK(counts5[4] == 1);

    auto q4 = gen_cube(4);
    auto lq4 = validate(q4).independence_level;
    auto counts4 = face_counts(q4, lq4);
    CHECK(counts4[0] == 16);
    CHECK(counts4[1] == 32);
    CHECK(counts4[2] == 24);
    CHECK(counts4[3] == 8);
    CHECK(counts4[4] == 1);
}

TEST_CASE("enumeration refusal below the independence level") {
    // K3 all r1: level 1, k=1 != n=2, so 1-face enumeration is refused
    auto s = ColoredSkeleton::build(1, 2, {"a", "b", "c"},
                                    {{"ab", "a", "b", GF2Vector(1, 1)},
                                     {"bc", "b", "c", GF2Vector(1, 1)},
                                     {"ca", "c", "a", GF2Vector(1, 1)}});
    int level = validate(s).independence_level;
    CHECK_THROWS_AS(enumerate_faces(s, 1, level), Error);
    // force skips failing seeds (and the whole skeleton is still the 2-face)
    CHECK(enumerate_faces(s, 1, level, true).empty());
    CHECK(enumerate_faces(s, 2, level).size() == 1);
    CHECK(enumerate_faces(s, 0, level).size() == 3);
}

TEST_CASE("frontier oracle agrees with the component construction") {
    for (const auto& s : {gen_simplex(3), gen_cube(3)}) {
        int level = validate(s).independence_level;
        for (int p = 0; p < s.vertex_count(); ++p) {
            const auto& st = s.star[p];
            for (int m = 1; m <= s.n; ++m) {
                std::vector<int> idx(m);
                for (int i = 0; i < m; ++i) idx[i] = i;
                while (true) {
                    std::vector<int> seeds;
                    for (int i : idx) seeds.push_back(st[i]);
                    auto a = extend_face(s, p, seeds);
                    auto b = oracles::frontier_extend(s, p, seeds);
                    REQUIRE(a.face.has_value());
                    REQUIRE(b.has_value());
                    CHECK(a.face->vertices == b->vertices);
                    CHECK(a.face->edges == b->edges);
                    int i = m - 1;
                    while (i >= 0 && idx[i] == (int)st.size() - m + i) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
        (void)level;
    }
}

TEST_CASE("face intersections decompose into faces") {
    auto k4 = gen_simplex(3);
    int level = validate(k4).independence_level;
    auto tri1 = extend_face(k4, k4.vertex_index("0"), edge_ids(k4, {"0-1", "0-2"}));
    auto tri2 = extend_face(k4, k4.vertex_index("0"), edge_ids(k4, {"0-1", "0-3"}));
    REQUIRE(tri1.face);
    REQUIRE(tri2.face);
    auto comps = face_intersection(k4, {*tri1.face, *tri2.face});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dim == 1);
    CHECK(comps[0].edges == edge_ids(k4, {"0-1"}));

    // disjoint squares of the 4-cube intersect in nothing
    auto q4 = gen_cube(4);
    auto sq1 = extend_face(q4, q4.vertex_index("0000"), edge_ids(q4, {"0000:1", "0000:2"}));
    auto sq2 = extend_face(q4, q4.vertex_index("0011"), edge_ids(q4, {"0011:1", "0011:2"}));
    REQUIRE(sq1.face);
    REQUIRE(sq2.face);
    CHECK(face_intersection(q4, {*sq1.face, *sq2.face}).empty());

    // idempotence
    auto self = face_intersection(k4, {*tri1.face, *tri1.face});
    REQUIRE(self.size() == 1);
    CHECK(self[0].same_cells(*tri1.face));
    (void)level;
}

TEST_CASE("pairwise intersections on K5 and Q4 decompose into faces") {
    for (const auto& s : {gen_simplex(4), gen_cube(4)}) {
        int level = validate(s).independence_level;
        std::vector<Face> all;
        for (int d = 0; d < level; ++d)
            for (auto& f : enumerate_faces(s, d, level)) all.push_back(std::move(f));
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                CHECK_NOTHROW(face_intersection(s, {all[i], all[j]}));
    }
}

TEST_CASE("facets_containing on the simplex and the cube") {
    auto k5 = gen_simplex(4);
    int e01 = k5.edge_index("0-1");
    auto chk = is_face(k5, {k5.edges[e01].u, k5.edges[e01].v}, {e01});
    REQUIRE(chk.ok);
    auto facets = facets_containing(k5, chk.face);
    CHECK(facets.size() == 3);  // tetrahedra omitting one of the vertices 2,3,4
    for (const auto& f : facets) {
        CHECK(f.dim == 3);
        CHECK(std::includes(f.edges.begin(), f.edges.end(), chk.face.edges.begin(),
                            chk.face.edges.end()));
    }

    auto q4 = gen_cube(4);
    Face vertex_face{{q4.vertex_index("0000")}, {}, 0, GF2Subspace{4, {}}};
    auto through_vertex = facets_containing(q4, vertex_face);
    CHECK(through_vertex.size() == 4);

    auto whole = extend_face(q4, 0, q4.star[0]);
    REQUIRE(whole.face);
    CHECK_THROWS_AS(facets_containing(q4, *whole.face), Error);
}

TEST_CASE("faces_containing_edges finds all faces through a seed set") {
    auto k4 = gen_simplex(3);
    int p = k4.vertex_index("0");
    auto through = faces_containing_edges(k4, p, edge_ids(k4, {"0-1", "0-2"}));
    REQUIRE(through.size() == 1);
    CHECK(through[0].dim == 2);
    CHECK(through[0].vertices ==
          std::vector<int>{k4.vertex_index("0"), k4.vertex_index("1"), k4.vertex_index("2")});
}
