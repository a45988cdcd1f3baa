#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "cvplat/io.hpp"
#include "cvplat/toplevel.hpp"
#include "helpers.hpp"

using namespace cvplat;
using namespace cvplat::testing;

namespace {

template <typename T, typename WriteFn, typename ReadFn>
T round_trip(const T& value, WriteFn&& write, ReadFn&& read) {
  std::ostringstream os;
  write(os, value);
  std::istringstream is(os.str());
  return read(is);
}

std::string serialized(const InstanceFile& f) {
  std::ostringstream os;
  write_instance(os, f);
  return os.str();
}

}  // namespace

TEST_CASE("instance round trip preserves every field") {
  const auto gen = generate_instance(5, 3, 2, 8, GenMode::PlantedNear, 77, 2);
  const InstanceFile f = make_instance_file(gen);
  const InstanceFile back = round_trip(
      f, [](std::ostream& os, const InstanceFile& v) { write_instance(os, v); },
      [](std::istream& is) { return read_instance(is); });
  CHECK(back == f);
  CHECK_NOTHROW(back.to_cvp());
  CHECK_THROWS_AS(back.to_svp(), ParseError);

  const auto svp = generate_svp_instance(4, 3, 4, 5, GenMode::Uniform, 9);
  const InstanceFile sf = make_instance_file(svp);
  const InstanceFile sback = round_trip(
      sf, [](std::ostream& os, const InstanceFile& v) { write_instance(os, v); },
      [](std::istream& is) { return read_instance(is); });
  CHECK(sback == sf);
  CHECK_NOTHROW(sback.to_svp());
}

TEST_CASE("generator is byte-deterministic for a fixed seed") {
  const auto a = generate_instance(7, 4, 2, 8, GenMode::Uniform, 424242);
  const auto b = generate_instance(7, 4, 2, 8, GenMode::Uniform, 424242);
  CHECK(serialized(make_instance_file(a)) == serialized(make_instance_file(b)));
  const auto c = generate_instance(7, 4, 2, 8, GenMode::Uniform, 424243);
  CHECK(serialized(make_instance_file(a)) != serialized(make_instance_file(c)));
}

TEST_CASE("planted modes produce the promised distances") {
  const auto zero = generate_instance(6, 3, 2, 8, GenMode::PlantedZero, 5);
  CHECK(brute_force_cvp(zero.inst).dist_pow == 0);
  CHECK(zero.inst.threshold_pow == 0);

  // zero perturbation reduces planted-near to planted-zero
  const auto near0 = generate_instance(6, 3, 2, 8, GenMode::PlantedNear, 5, 0);
  CHECK(near0.inst.basis == zero.inst.basis);
  CHECK(near0.inst.target == zero.inst.target);
  CHECK(near0.inst.threshold_pow == 0);

  const auto near = generate_instance(6, 3, 2, 8, GenMode::PlantedNear, 5, 2);
  CHECK(brute_force_cvp(near.inst).dist_pow <= near.inst.threshold_pow);

  const auto svp_zero = generate_svp_instance(5, 3, 2, 6, GenMode::PlantedZero, 8);
  CHECK(brute_force_svp(svp_zero.inst).dist_pow == 0);
}

TEST_CASE("graph files round trip") {
  Rng rng(81);
  const CvpInstance inst =
      make_cvp(random_cols(rng, 5, 3, 6), random_vec(rng, 3, 6));
  const GraphFile gf = make_graph_file(reduce_cvp_to_clique(inst, 2));
  const GraphFile gback = round_trip(
      gf, [](std::ostream& os, const GraphFile& v) { write_graph(os, v); },
      [](std::istream& is) { return read_graph(is); });
  CHECK(gback == gf);

  const CvpInstance inst4 =
      make_cvp(random_cols(rng, 5, 2, 3), random_vec(rng, 2, 3), 4);
  const GraphFile hf = make_graph_file(reduce_cvp_to_hyperclique(inst4, 4));
  const GraphFile hback = round_trip(
      hf, [](std::ostream& os, const GraphFile& v) { write_graph(os, v); },
      [](std::istream& is) { return read_graph(is); });
  CHECK(hback == hf);
  CHECK(hback.kind == "hyperclique");
}

TEST_CASE("wcnf files round trip") {
  Rng rng(82);
  const CvpInstance inst =
      make_cvp(random_cols(rng, 4, 3, 5), random_vec(rng, 3, 5));
  const WcnfFormula f = reduce_cvp_to_wcnf(inst);
  const WcnfFormula back = round_trip(
      f, [](std::ostream& os, const WcnfFormula& v) { write_wcnf(os, v); },
      [](std::istream& is) { return read_wcnf(is); });
  CHECK(back.num_vars == f.num_vars);
  CHECK(back.num_base_vars == f.num_base_vars);
  CHECK(back.p == f.p);
  CHECK(back.offset == f.offset);
  CHECK(back.scale == f.scale);
  CHECK(back.base_weight == f.base_weight);
  CHECK(back.threshold == f.threshold);
  CHECK(back.clauses == f.clauses);

  // an svp formula carries auxiliaries; make sure they survive
  const WcnfFormula svp = reduce_svp_to_wcnf(make_svp(random_cols(rng, 5, 2, 4)));
  const WcnfFormula sback = round_trip(
      svp, [](std::ostream& os, const WcnfFormula& v) { write_wcnf(os, v); },
      [](std::istream& is) { return read_wcnf(is); });
  CHECK(sback.num_vars == svp.num_vars);
  CHECK(sback.num_base_vars == svp.num_base_vars);
  CHECK(sback.clauses == svp.clauses);
}

TEST_CASE("report round trip") {
  SolveReport r;
  r.z = {1, 0, 1};
  r.dist_pow = Int("123456789123456789123456789");
  r.method = "naive-triangle";
  r.scale = Int(6);
  r.witness_picks = std::vector<std::uint64_t>{3, 1, 0};
  const SolveReport back = round_trip(
      r, [](std::ostream& os, const SolveReport& v) { write_report(os, v); },
      [](std::istream& is) { return read_report(is); });
  CHECK(back.z == r.z);
  CHECK(back.dist_pow == r.dist_pow);
  CHECK(back.method == r.method);
  CHECK(*back.scale == *r.scale);
  CHECK(*back.witness_picks == *r.witness_picks);
}

TEST_CASE("comments are tolerated, junk is rejected") {
  const auto gen = generate_instance(3, 2, 2, 4, GenMode::Uniform, 3);
  std::string text = serialized(make_instance_file(gen));
  text.insert(0, "# produced by a test\n");
  std::istringstream ok(text);
  CHECK_NOTHROW(read_instance(ok));

  std::istringstream bad_magic("something-else v1\nend\n");
  CHECK_THROWS_AS(read_instance(bad_magic), ParseError);

  std::istringstream truncated("cvplat-instance v1\nkind cvp\n");
  CHECK_THROWS_AS(read_instance(truncated), ParseError);

  std::istringstream bad_int("cvplat-instance v1\nkind cvp\np 2\nm 1\nn x\nend\n");
  CHECK_THROWS_AS(read_instance(bad_int), ParseError);

  std::istringstream unclosed_clause("p wcnf 2 1 10\n5 1 2\n");
  CHECK_THROWS_AS(read_wcnf(unclosed_clause), ParseError);
}
