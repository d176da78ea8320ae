#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include <difun/difun.h>

using nlohmann::json;

namespace {

struct Owned {
  char* ptr = nullptr;
  ~Owned() { difun_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct Rel {
  difun_relation* ptr = nullptr;
  ~Rel() { difun_relation_free(ptr); }
};

Rel parse(const std::string& doc) {
  Rel r;
  REQUIRE(difun_relation_parse(doc.c_str(), &r.ptr) == DIFUN_OK);
  return r;
}

// Split the JSONL output into body lines and the parsed trailer object.
std::pair<int, json> split_lines(const std::string& text) {
  int body = 0;
  std::string last;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    last = text.substr(start, end - start);
    ++body;
    start = end + 1;
  }
  return {body - 1, json::parse(last)};
}

}  // namespace

TEST_CASE("version and a clean error slate") {
  CHECK(std::string(difun_version()) == "1.0.0");
  difun_string_free(nullptr);   // both deallocators shrug at null
  difun_relation_free(nullptr);
}

TEST_CASE("relation values round trip through JSON") {
  Rel a = parse(R"({"n":3,"blocks":[[[1,2],[2]],[[3],[1,3]]]})");
  CHECK(difun_relation_ground_set(a.ptr) == 3);
  CHECK(difun_relation_rank(a.ptr) == 2);

  Owned out;
  REQUIRE(difun_relation_to_json(a.ptr, &out.ptr) == DIFUN_OK);
  Rel again = parse(out.str());
  CHECK(difun_relation_equal(a.ptr, again.ptr) == 1);

  Rel id3;
  REQUIRE(difun_relation_identity(3, &id3.ptr) == DIFUN_OK);
  CHECK(difun_relation_rank(id3.ptr) == 3);
  Rel zero;
  REQUIRE(difun_relation_zero(3, &zero.ptr) == DIFUN_OK);
  CHECK(difun_relation_rank(zero.ptr) == 0);
  CHECK(difun_relation_equal(id3.ptr, zero.ptr) == 0);
  CHECK(difun_relation_equal(nullptr, zero.ptr) == -1);
}

TEST_CASE("products and inverses behave like the library") {
  Rel collapse = parse(R"({"n":3,"blocks":[[[1,2],[1]]]})");
  Rel expand = parse(R"({"n":3,"blocks":[[[1],[2,3]]]})");
  Rel prod;
  REQUIRE(difun_diamond(collapse.ptr, expand.ptr, &prod.ptr) == DIFUN_OK);
  Rel expected = parse(R"({"n":3,"blocks":[[[1,2],[2,3]]]})");
  CHECK(difun_relation_equal(prod.ptr, expected.ptr) == 1);

  Rel inv;
  REQUIRE(difun_inverse(collapse.ptr, &inv.ptr) == DIFUN_OK);
  Rel inv_expected = parse(R"({"n":3,"blocks":[[[1],[1,2]]]})");
  CHECK(difun_relation_equal(inv.ptr, inv_expected.ptr) == 1);

  // Mismatched ground sets are refused with the dimension code.
  Rel small = parse(R"({"n":2,"blocks":[[[1],[1]]]})");
  difun_relation* bad = nullptr;
  CHECK(difun_diamond(collapse.ptr, small.ptr, &bad) == DIFUN_ERROR_DIMENSION);
  CHECK(bad == nullptr);
  CHECK(std::string(difun_last_error()).find("ground-set") !=
        std::string::npos);
}

TEST_CASE("error codes separate parse, usage, and dimension trouble") {
  difun_relation* out = nullptr;
  CHECK(difun_relation_parse("not json at all", &out) == DIFUN_ERROR_PARSE);
  CHECK(difun_relation_parse(R"({"n":3})", &out) == DIFUN_ERROR_PARSE);
  CHECK(std::string(difun_last_error()).find("blocks") != std::string::npos);
  // Overlapping kernel blocks are a semantic violation, not a parse one.
  CHECK(difun_relation_parse(
            R"({"n":3,"blocks":[[[1,2],[1]],[[2,3],[2]]]})", &out) ==
        DIFUN_ERROR_USAGE);
  CHECK(difun_relation_parse(nullptr, &out) == DIFUN_ERROR_USAGE);
  CHECK(difun_relation_identity(0, &out) == DIFUN_ERROR_DIMENSION);
  CHECK(out == nullptr);
}

TEST_CASE("tables render through the C surface") {
  Owned text;
  REQUIRE(difun_render_tables(13, "csv", &text.ptr) == DIFUN_OK);
  CHECK(text.str().find("13,27644450") != std::string::npos);
  CHECK(text.str().find("2,1,3,3") != std::string::npos);

  Owned bad;
  CHECK(difun_render_tables(13, "yaml", &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(bad.ptr == nullptr);
  CHECK(difun_render_tables(1, "text", &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(difun_render_tables(13, nullptr, &bad.ptr) == DIFUN_ERROR_USAGE);
}

TEST_CASE("rank reports arrive as JSON with string counts") {
  Owned report;
  REQUIRE(difun_rank_report_json(7, 3, &report.ptr) == DIFUN_OK);
  json doc = json::parse(report.str());
  CHECK(doc["rank"] == "1768");
  CHECK(doc["claimed_range"] == true);

  Owned tiny;
  REQUIRE(difun_rank_report_json(1, 1, &tiny.ptr) == DIFUN_OK);
  CHECK(json::parse(tiny.str())["claimed_range"] == false);

  Owned bad;
  CHECK(difun_rank_report_json(0, 0, &bad.ptr) == DIFUN_ERROR_DIMENSION);
  CHECK(difun_rank_report_json(3, 4, &bad.ptr) == DIFUN_ERROR_USAGE);
}

TEST_CASE("enumeration emits one element per line plus a count") {
  Owned out;
  REQUIRE(difun_enumerate_json(3, 3, 0, &out.ptr) == DIFUN_OK);
  auto [body, trailer] = split_lines(out.str());
  CHECK(body == 6);  // the permutations
  CHECK(trailer["count"] == 6);

  Owned all;
  REQUIRE(difun_enumerate_json(2, -1, 0, &all.ptr) == DIFUN_OK);
  CHECK(split_lines(all.str()).second["count"] == 12);

  Owned ideal;
  REQUIRE(difun_enumerate_json(3, 2, 1, &ideal.ptr) == DIFUN_OK);
  CHECK(split_lines(ideal.str()).second["count"] == 122);

  Owned bad;
  CHECK(difun_enumerate_json(6, -1, 0, &bad.ptr) == DIFUN_ERROR_BUDGET);
  CHECK(difun_enumerate_json(3, 4, 0, &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(difun_enumerate_json(0, -1, 0, &bad.ptr) == DIFUN_ERROR_USAGE);
}

TEST_CASE("closure of a generator file grows to the whole ideal") {
  // The rank-1 class on two points: nine elements, closing to ten.
  Owned gens;
  REQUIRE(difun_enumerate_json(2, 1, 0, &gens.ptr) == DIFUN_OK);
  std::string text = gens.str();
  json array = json::array();
  std::size_t start = 0;
  for (int i = 0; i < 9; ++i) {
    std::size_t end = text.find('\n', start);
    array.push_back(json::parse(text.substr(start, end - start)));
    start = end + 1;
  }

  Owned closed;
  REQUIRE(difun_closure_json(array.dump().c_str(), 0, &closed.ptr) == DIFUN_OK);
  auto [body, trailer] = split_lines(closed.str());
  CHECK(body == 10);
  CHECK(trailer["count"] == 10);
  CHECK(trailer["exhausted"] == true);
  CHECK(trailer["products"] > 0);

  Owned cut;
  CHECK(difun_closure_json(array.dump().c_str(), 3, &cut.ptr) ==
        DIFUN_ERROR_BUDGET);
  Owned bad;
  CHECK(difun_closure_json("[{\"n\":2,\"blocks\":[]},{\"n\":3,\"blocks\":[]}]",
                           0, &bad.ptr) == DIFUN_ERROR_DIMENSION);
  CHECK(difun_closure_json("oops", 0, &bad.ptr) == DIFUN_ERROR_PARSE);
}

TEST_CASE("audit verdicts travel as JSON") {
  Owned verdict;
  REQUIRE(difun_audit_json(3, 2, "[]", &verdict.ptr) == DIFUN_OK);
  json doc = json::parse(verdict.str());
  CHECK(doc["passed"] == false);
  CHECK(doc["missing_kernels"] == json::parse("[[[1,2,3]]]"));

  Owned good;
  REQUIRE(difun_audit_json(
              3, 2,
              R"([{"n":3,"blocks":[[[1,2,3]],[[1,2,3]]]}])"
              ,
              &good.ptr) == DIFUN_ERROR_PARSE);  // malformed entry: 1 block
}

TEST_CASE("audit accepts a real completion") {
  // lambda and rho on the one-block partition complete the rank-2 ideal.
  json candidate = json::array();
  candidate.push_back(json::parse(R"({"n":3,"blocks":[[[1,2,3],[1]]]})"));
  candidate.push_back(json::parse(R"({"n":3,"blocks":[[[1],[1,2,3]]]})"));
  Owned verdict;
  REQUIRE(difun_audit_json(3, 2, candidate.dump().c_str(), &verdict.ptr) ==
          DIFUN_OK);
  CHECK(json::parse(verdict.str())["passed"] == true);

  Owned bad;
  CHECK(difun_audit_json(3, 5, "[]", &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(difun_audit_json(13, 2, "[]", &bad.ptr) == DIFUN_ERROR_DIMENSION);
}

TEST_CASE("verification runs and reports through the C surface") {
  Owned report;
  REQUIRE(difun_verify(2, "exhaustive", 0, 0, &report.ptr) == DIFUN_OK);
  CHECK(report.str().find("all checks passed") != std::string::npos);

  Owned as_json;
  REQUIRE(difun_verify(2, "formula", 0, 1, &as_json.ptr) == DIFUN_OK);
  json doc = json::parse(as_json.str());
  CHECK(doc["all_passed"] == true);
  CHECK(doc["checks"].size() == 3);

  // A starved budget is reported, and the partial report still arrives.
  Owned partial;
  CHECK(difun_verify(3, "closure", 100, 0, &partial.ptr) ==
        DIFUN_ERROR_BUDGET);
  CHECK(partial.str().find("INCONCLUSIVE") != std::string::npos);

  Owned bad;
  CHECK(difun_verify(3, "deep", 0, 0, &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(difun_verify(4, "exhaustive", 0, 0, &bad.ptr) == DIFUN_ERROR_USAGE);
  CHECK(difun_verify(2, nullptr, 0, 0, &bad.ptr) == DIFUN_ERROR_USAGE);
}
