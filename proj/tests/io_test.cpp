#include "doctest.h"
#include "matroidkit/builders.hpp"
#include "matroidkit/constructions.hpp"
#include "matroidkit/harness.hpp"
#include "matroidkit/io.hpp"
#include "oracle.hpp"

using namespace matroidkit;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("bases form") {
  const auto f = parse(
      "name U24\n"
      "elements a b c d\n"
      "bases {a,b} {a,c} {a,d} {b,c} {b,d} {c,d}\n");
  CHECK(f.name == "U24");
  CHECK(f.matroid == uniform(2, 4));
  CHECK(f.matroid.label(2) == "c");
}

TEST_CASE("comments, spacing and continued lists") {
  const auto f = parse(
      "# uniform\n"
      "name   U24   # trailing\n"
      "\n"
      "elements a b c d\n"
      "bases { a , b } {a,c} {a,d}\n"
      "bases {b,c} {b,d}   {c,d}\n");
  CHECK(f.matroid == uniform(2, 4));
}

TEST_CASE("circuits form") {
  const auto f = parse(
      "name K4\n"
      "elements a b c d e f\n"
      "circuits {a,b,c} {a,e,f} {b,d,f} {c,d,e}\n"
      "circuits {a,b,d,e} {a,c,d,f} {b,c,e,f}\n");
  CHECK(f.matroid.rank() == 3);
  CHECK(f.matroid.bases().size() == 16);
  CHECK(oracle::circuits(oracle::bases_of(f.matroid), 6).size() == 7);
}

TEST_CASE("nonspanning circuits form gives U8") {
  const auto f = parse(
      "name U8\n"
      "elements p1 p2 q1 q2 s1 s2 t1 t2\n"
      "rank 4\n"
      "nonspanning_circuits {t1,t2,p1,q1} {t1,t2,p2,q2} {p1,p2,q1,q2}\n"
      "nonspanning_circuits {p1,p2,s1,s2} {q1,q2,s1,s2}\n");
  CHECK(f.matroid == u8());
  CHECK(f.matroid.labels() == u8().labels());
  // 70 four-sets less the five circuit-hyperplanes.
  CHECK(f.matroid.bases().size() == 65);
}

TEST_CASE("rank zero") {
  const auto f = parse("name L\nelements a\nbases {}\n");
  CHECK(f.matroid.rank() == 0);
  CHECK(serialize(f.matroid, f.name) == "name L\nelements a\nbases {}\n");
}

TEST_CASE("canonical serialization") {
  const auto text = serialize(uniform(2, 4), "U24");
  CHECK(text ==
        "name U24\nelements e0 e1 e2 e3\n"
        "bases {e0,e1} {e0,e2} {e0,e3} {e1,e2} {e1,e3} {e2,e3}\n");
  const auto f = parse(text);
  CHECK(serialize(f.matroid, f.name) == text);
}

TEST_CASE("long basis lists wrap at ten sets per line") {
  const auto text = serialize(wheel(3), "K4");
  int lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(parse(text).matroid == wheel(3));
}

TEST_CASE("round trip over the catalog") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    const auto text = serialize(e.matroid, e.id);
    const auto f = parse(text);
    CHECK(f.name == e.id);
    CHECK(f.matroid == e.matroid);
    CHECK(f.matroid.labels() == e.matroid.labels());
    CHECK(serialize(f.matroid, f.name) == text);
  }
}

TEST_CASE("parse errors carry the line") {
  CHECK(parse_error_line("name A\nelements a b\nbases {a,c}\n") == 3);
  CHECK(parse_error_line("name A\nbases {a}\n") == 2);
  CHECK(parse_error_line("name A\nelements a a\n") == 2);
  CHECK(parse_error_line("name A\nelements a b\nbases {a} {b\n") == 3);
  CHECK(parse_error_line("name A\nelements a b\nfoo\n") == 3);
  CHECK(parse_error_line("name A B\n") == 1);
  CHECK(parse_error_line("name A\nelements a b\n") == 2);
  CHECK(parse_error_line("name A\nelements a b\nbases {a}\ncircuits {b}\n") == 4);
  CHECK(parse_error_line("name A\nelements a b c\nnonspanning_circuits {a,b}\n") == 3);
  CHECK(parse_error_line("name A\nelements a b\nrank 2\nbases {a}\n") == 4);
  CHECK(parse_error_line("name A\nelements a b\nrank x\n") == 3);
}

TEST_CASE("axiom violations propagate") {
  auto kind = [](std::string_view text) {
    try {
      parse(text);
    } catch (const ParseError&) {
      return ErrorKind::kParseError;
    } catch (const MatroidError& e) {
      return e.kind();
    }
    return ErrorKind::kBadInput;
  };
  CHECK(kind("name A\nelements a b c d\nbases {a,b} {c,d}\n") == ErrorKind::kAxiomViolation);
  CHECK(kind("name A\nelements a b c\ncircuits {a,b} {a,c}\n") == ErrorKind::kAxiomViolation);
  CHECK(kind("name A\nelements a b c\nbases {a} {b,c}\n") == ErrorKind::kCardinalityMismatch);
}
