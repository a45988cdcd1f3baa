#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvplat/clique.hpp"
#include "cvplat/generate.hpp"
#include "cvplat/hyperclique.hpp"
#include "cvplat/maxsat.hpp"

namespace cvplat {

// All formats are line-oriented text with decimal big integers: exact,
// diffable, and byte-stable for fixed inputs. '#' starts a comment.

struct InstanceFile {
  std::string kind;  // "cvp" or "svp"
  unsigned p = 2;
  std::size_t m = 0, n = 0;
  std::vector<IntVector> basis;
  std::optional<IntVector> target;  // absent for svp
  Int threshold_pow;
  std::optional<std::vector<std::uint8_t>> planted;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> coord_bound;
  std::optional<std::string> mode;

  bool operator==(const InstanceFile&) const = default;

  CvpInstance to_cvp() const;
  SvpInstance to_svp() const;
};

InstanceFile make_instance_file(const GeneratedCvp& g);
InstanceFile make_instance_file(const GeneratedSvp& g);
InstanceFile make_instance_file(const CvpInstance& inst);
InstanceFile make_instance_file(const SvpInstance& inst);

void write_instance(std::ostream& os, const InstanceFile& f);
InstanceFile read_instance(std::istream& is);

// Graph and hypergraph share one format: scaled integer weights plus the
// scale factor, so external clique solvers never need rational arithmetic.
// Weight blocks are row-major over the vertex tuple of each part subset.
struct GraphFile {
  std::string kind;  // "clique" or "hyperclique"
  unsigned p = 2;
  std::size_t k = 0, n = 0;
  Int scale;
  Int threshold_scaled;
  std::vector<std::size_t> parts;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<Int>> weights;

  bool operator==(const GraphFile&) const = default;
};

GraphFile make_graph_file(const KPartiteGraph& g);
GraphFile make_graph_file(const PUniformHypergraph& h);

void write_graph(std::ostream& os, const GraphFile& f);
GraphFile read_graph(std::istream& is);

// DIMACS-style weighted CNF: "p wcnf <vars> <clauses> <top>" then one clause
// per line, weight first, zero-terminated literals. Reduction metadata
// (offset, scale, threshold, ...) rides along in comment lines so a round
// trip through an external solver loses nothing.
void write_wcnf(std::ostream& os, const WcnfFormula& f);
WcnfFormula read_wcnf(std::istream& is);

void write_report(std::ostream& os, const SolveReport& r);
SolveReport read_report(std::istream& is);

// Convenience file wrappers; throw ParseError on I/O failure.
void write_instance_file(const std::string& path, const InstanceFile& f);
InstanceFile read_instance_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphFile& f);
GraphFile read_graph_file(const std::string& path);
void write_wcnf_file(const std::string& path, const WcnfFormula& f);
WcnfFormula read_wcnf_file(const std::string& path);
void write_report_file(const std::string& path, const SolveReport& r);
SolveReport read_report_file(const std::string& path);

}  // namespace cvplat
