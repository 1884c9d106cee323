#include <doctest.h>

#include <random>

#include "kakeya/error.hpp"
#include "kakeya/serialize.hpp"

using namespace kakeya;
using nlohmann::json;

TEST_CASE("rational values") {
  CHECK(rational_json(Rational(625, 2)) == json("625/2"));
  CHECK(rational_json(Rational(300)) == json(300));
  CHECK(rational_json(Rational(-25)) == json(-25));
}

TEST_CASE("set files round trip") {
  std::mt19937_64 rng(17);
  for (auto [p, k, n] : {std::tuple<std::uint64_t, unsigned, std::size_t>{3, 1, 2},
                         {5, 1, 3}, {3, 2, 2}, {7, 1, 1}, {3, 3, 1}}) {
    Space s(Field::make(p, k), n);
    std::bernoulli_distribution take(0.3);
    for (int trial = 0; trial < 20; ++trial) {
      PointSet set(s);
      for (std::uint64_t r = 0; r < s.size(); ++r)
        if (take(rng)) set.insert(r);
      json doc = set_file_json(set);
      CHECK(doc["q"] == s.field().q());
      CHECK(set_from_json(json::parse(doc.dump())) == set);
    }
  }
}

TEST_CASE("malformed set files") {
  auto code_of = [](const char* text) {
    try {
      set_from_json(json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Overflow;
  };
  CHECK(code_of(R"({"p":3,"k":1,"n":2})") == ErrorCode::Parse);
  CHECK(code_of(R"({"q":10,"p":3,"k":2,"n":2,"ranks":[]})") == ErrorCode::Parse);
  CHECK(code_of(R"({"p":"x","k":1,"n":2,"ranks":[]})") == ErrorCode::Parse);
  CHECK(code_of(R"({"p":3,"k":1,"n":2,"ranks":[9]})") == ErrorCode::InvalidArgument);
  CHECK(code_of(R"({"p":4,"k":1,"n":2,"ranks":[]})") == ErrorCode::NonOddPrime);
}

TEST_CASE("construction documents") {
  auto res = radius_spherical(Field::make(5), 4);
  auto a = assess(res);
  json doc = construction_json(res, a);
  CHECK(doc["size"] == 345);
  CHECK(doc["boundValue"] == 300);
  CHECK(doc["witnessValid"] == true);
  CHECK(doc["exhaustiveValid"].is_null());
  CHECK(doc["predictedMainTerms"] == json::array({"625/2", "125/2", -25}));
  CHECK(doc["witness"]["entries"].size() == 4);

  CHECK(csv_header() ==
        "q,p,k,n,construction,variant,size,mainTerm1,mainTerm2,mainTerm3,bound,"
        "boundMet,witnessValid");
  CHECK(construction_csv_row(res, a) ==
        "5,5,1,4,radius-spherical,,345,625/2,125/2,-25,300,true,true");

  json b = bound_json(theorem1_bound(3, 4));
  CHECK(b["boundValue"] == 36);
  CHECK(b["boundCeil"] == 36);
}

TEST_CASE("search documents") {
  auto out = minimal_circular_exact(Field::make(3), CircularKind::Radius);
  json doc = search_json(out);
  CHECK(doc["minimalSize"] == 2);
  CHECK(doc["exampleSet"] == json::array({0, 1}));
  CHECK(doc["certified"] == true);
  json g = search_json(greedy_circular(Field::make(3), CircularKind::Radius));
  CHECK(g.contains("foundSize"));
  CHECK_FALSE(g.contains("minimalSize"));
}
