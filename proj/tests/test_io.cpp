#include <gtest/gtest.h>

#include <ptrans/ptrans.hpp>

using namespace ptrans;

namespace {

const char* kTetra = R"({"vertices": ["a","b","c","d"],
  "triangles": [["a","b","c"],["a","b","d"],["a","c","d"],["b","c","d"]], "pure_dim2": true})";

std::shared_ptr<const SimplicialComplex> tetra() { return std::make_shared<const SimplicialComplex>(load_complex(kTetra)); }

}  // namespace

TEST(Io, ComplexRoundTrip)
{
  auto k = load_complex(kTetra);
  EXPECT_EQ(k.triangles().size(), 4u);
  EXPECT_TRUE(k.pure_dim2());
  auto again = load_complex(complex_to_json(k).dump());
  EXPECT_EQ(again.edges(), k.edges());
  EXPECT_EQ(again.triangles(), k.triangles());
}

TEST(Io, ComplexErrors)
{
  EXPECT_THROW(load_complex(R"({"vertices": ["a","b"], "triangles": [["a","b","c"]]})"), ValidationError);
  EXPECT_NO_THROW(parse_complex(R"({"vertices": ["a","b"], "triangles": [["a","b","c"]]})"));
  EXPECT_THROW(parse_complex(R"({"vertices": ["a"], "colour": 1})"), ParseError);
  try {
    parse_complex("{\n  \"vertices\": [\"a\",\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Io, GroupDescriptors)
{
  EXPECT_EQ(parse_group(std::string_view(R"({"cyclic": 5})")), Group::cyclic(5));
  EXPECT_EQ(parse_group(std::string_view(R"({"symmetric": 3})")), Group::symmetric(3));
  EXPECT_EQ(parse_group(std::string_view(R"({"dihedral": 4})")), Group::dihedral(4));
  EXPECT_EQ(parse_group(std::string_view(R"({"free": ["x","y"]})")), Group::free({"x", "y"}));
  Group p = Group::product({Group::cyclic(2), Group::symmetric(3)});
  EXPECT_EQ(parse_group(std::string_view(R"([{"cyclic": 2}, {"symmetric": 3}])")), p);
  EXPECT_EQ(parse_group(group_to_json(p)), p);
  EXPECT_THROW(parse_group(std::string_view(R"({"lie": 3})")), ParseError);
  EXPECT_THROW(parse_group(std::string_view(R"({"cyclic": 0})")), ParseError);
  EXPECT_THROW(parse_group(std::string_view(R"({"cyclic": 2, "symmetric": 3})")), ParseError);
}

TEST(Io, ConnectionLoadsAndRoundTrips)
{
  const char* text = R"({"group": {"cyclic": 12},
    "edges": {"a>b": "3", "b>d": 4, "d>a": "7", "a>c": "1", "b>c": "5", "c>d": "2"},
    "cells": {"acb": "2", "c.a.b.c": "5"},
    "cell_relations": [["b.c.a", "a.c.b", "inverse"]]})";
  auto C = load_connection(text, tetra());
  EXPECT_EQ(holonomy(C.base(), EdgePath::through({"a", "b", "d", "a"})), C.group().parse("2"));
  EXPECT_EQ(C.alpha_value("a", "c", "b"), C.group().parse("2"));
  EXPECT_EQ(C.alpha_value("b", "c", "a"), C.group().parse("10"));
  EXPECT_TRUE(C.beta_value("c", "a", "b").independent);
  auto again = load_connection(connection_to_json(C).dump(), tetra());
  EXPECT_EQ(again.base().stored(), C.base().stored());
  EXPECT_EQ(again.cells(), C.cells());
}

TEST(Io, ConnectionErrors)
{
  EXPECT_THROW(load_connection(R"({"group": {"cyclic": 3}, "edges": {"a>b": "1"}})", tetra()), ParseError);
  EXPECT_THROW(load_connection(R"({"edges": {}})", tetra()), ParseError);
  EXPECT_THROW(load_connection(R"({"group": {"cyclic": 3}, "edges": {"ab": "1"}})", tetra()), ParseError);
}

TEST(Io, ExtraFreeGenerators)
{
  const char* text = R"({"group": {"free": ["f"]},
    "edges": {"a>b": "f", "a>c": "e", "a>d": "e", "b>c": "e", "b>d": "e", "c>d": "e"}})";
  auto C = load_connection(text, tetra(), {"x", "y"});
  EXPECT_NO_THROW(C.group().parse("x*y*f"));
  EXPECT_THROW(load_connection(text, tetra()).group().parse("x"), GroupError);
}

TEST(Io, SchemeAndTraceRoundTrip)
{
  SweepScheme s{EdgePath::through({"a", "c", "b"}),
                {{MoveKind::alpha_merge, {"a", "c", "b"}, 0},
                 {MoveKind::x1_insert, {"d"}, 1},
                 {MoveKind::x1_cancel, {}, 1}}};
  auto again = parse_scheme(scheme_to_json(s).dump());
  EXPECT_EQ(again.start, s.start);
  EXPECT_EQ(again.steps, s.steps);
  EXPECT_THROW(parse_scheme(R"({"start": [["a","c"]], "steps": [{"move": "warp", "position": 0}]})"), ParseError);

  Group g = Group::free({"x", "y"});
  auto C = Connection2::flat(Connection1::trivial(g, tetra()));
  Section s0(s.start, {g.parse("x"), g.parse("y")});
  auto t = run_scheme(s0, s, C);
  auto back = trace_sections_from_json(trace_to_json(t, g), g);
  EXPECT_EQ(back, t.sections);
}

TEST(Io, VertexSequences)
{
  EXPECT_EQ(parse_vertex_sequence("a,b,d,a"), EdgePath::through({"a", "b", "d", "a"}));
  EXPECT_EQ(parse_vertex_sequence("a b"), EdgePath::through({"a", "b"}));
  EXPECT_EQ(parse_vertex_sequence("c"), EdgePath::identity("c"));
  EXPECT_THROW(parse_vertex_sequence(" , "), ParseError);
}
