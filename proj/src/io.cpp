#include "cvplat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cvplat {

namespace {

// Whitespace tokens; '#' starts a comment running to end of line.
struct Tokenizer {
  std::istream& is;

  bool try_next(std::string& out) {
    for (;;) {
      int c = is.peek();
      if (c == EOF) return false;
      if (c == '#') {
        std::string junk;
        std::getline(is, junk);
        continue;
      }
      if (std::isspace(c)) {
        is.get();
        continue;
      }
      break;
    }
    return static_cast<bool>(is >> out);
  }

  std::string next(const char* what) {
    std::string t;
    if (!try_next(t)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return t;
  }

  void expect(const std::string& token) {
    const std::string t = next(token.c_str());
    if (t != token)
      throw ParseError("expected '" + token + "', got '" + t + "'");
  }

  Int next_int(const char* what) { return parse_int(next(what)); }

  std::uint64_t next_u64(const char* what) {
    const Int v = next_int(what);
    if (v < 0 || !v.fits_ulong_p())
      throw ParseError(std::string("value out of range for ") + what);
    return v.get_ui();
  }
};

void write_ints(std::ostream& os, const std::vector<Int>& vals,
                std::size_t per_line) {
  for (std::size_t i = 0; i < vals.size(); ++i) {
    os << to_string(vals[i]);
    os << ((i + 1 == vals.size() || (i + 1) % per_line == 0) ? '\n' : ' ');
  }
}

std::vector<std::uint8_t> read_bits(Tokenizer& tok, std::size_t count,
                                    const char* what) {
  std::vector<std::uint8_t> bits(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t b = tok.next_u64(what);
    if (b > 1) throw ParseError(std::string(what) + ": bits must be 0 or 1");
    bits[i] = static_cast<std::uint8_t>(b);
  }
  return bits;
}

}  // namespace

CvpInstance InstanceFile::to_cvp() const {
  if (kind != "cvp") throw ParseError("instance file is not a cvp instance");
  if (!target) throw ParseError("cvp instance lacks a target vector");
  CvpInstance inst{basis, *target, p, threshold_pow};
  inst.validate();
  return inst;
}

SvpInstance InstanceFile::to_svp() const {
  if (kind != "svp") throw ParseError("instance file is not an svp instance");
  SvpInstance inst{basis, p, threshold_pow};
  inst.validate();
  return inst;
}

InstanceFile make_instance_file(const CvpInstance& inst) {
  InstanceFile f;
  f.kind = "cvp";
  f.p = inst.p;
  f.m = inst.m();
  f.n = inst.n();
  f.basis = inst.basis;
  f.target = inst.target;
  f.threshold_pow = inst.threshold_pow;
  return f;
}

InstanceFile make_instance_file(const SvpInstance& inst) {
  InstanceFile f;
  f.kind = "svp";
  f.p = inst.p;
  f.m = inst.m();
  f.n = inst.n();
  f.basis = inst.basis;
  f.threshold_pow = inst.threshold_pow;
  return f;
}

InstanceFile make_instance_file(const GeneratedCvp& g) {
  InstanceFile f = make_instance_file(g.inst);
  f.planted = g.planted;
  f.seed = g.seed;
  f.coord_bound = g.coord_bound;
  f.mode = gen_mode_name(g.mode);
  return f;
}

InstanceFile make_instance_file(const GeneratedSvp& g) {
  InstanceFile f = make_instance_file(g.inst);
  f.planted = g.planted;
  f.seed = g.seed;
  f.coord_bound = g.coord_bound;
  f.mode = gen_mode_name(g.mode);
  return f;
}

void write_instance(std::ostream& os, const InstanceFile& f) {
  os << "cvplat-instance v1\n";
  os << "kind " << f.kind << "\n";
  os << "p " << f.p << "\n";
  os << "m " << f.m << "\n";
  os << "n " << f.n << "\n";
  os << "threshold_pow " << to_string(f.threshold_pow) << "\n";
  for (const IntVector& col : f.basis) {
    os << "column";
    for (const Int& v : col.e) os << ' ' << to_string(v);
    os << "\n";
  }
  if (f.target) {
    os << "target";
    for (const Int& v : f.target->e) os << ' ' << to_string(v);
    os << "\n";
  }
  if (f.planted) {
    os << "planted";
    for (std::uint8_t b : *f.planted) os << ' ' << int(b);
    os << "\n";
  }
  if (f.seed) os << "seed " << *f.seed << "\n";
  if (f.coord_bound) os << "coord_bound " << *f.coord_bound << "\n";
  if (f.mode) os << "mode " << *f.mode << "\n";
  os << "end\n";
}

InstanceFile read_instance(std::istream& is) {
  Tokenizer tok{is};
  tok.expect("cvplat-instance");
  tok.expect("v1");
  InstanceFile f;
  bool have_dims = false;
  for (;;) {
    const std::string key = tok.next("instance key");
    if (key == "end") break;
    if (key == "kind") {
      f.kind = tok.next("kind");
    } else if (key == "p") {
      f.p = static_cast<unsigned>(tok.next_u64("p"));
    } else if (key == "m") {
      f.m = tok.next_u64("m");
      have_dims = f.m > 0;
    } else if (key == "n") {
      f.n = tok.next_u64("n");
    } else if (key == "threshold_pow") {
      f.threshold_pow = tok.next_int("threshold_pow");
    } else if (key == "column" || key == "target") {
      if (!have_dims) throw ParseError("m must precede vector data");
      IntVector v(f.m);
      for (std::size_t i = 0; i < f.m; ++i) v.e[i] = tok.next_int("coordinate");
      if (key == "column")
        f.basis.push_back(std::move(v));
      else
        f.target = std::move(v);
    } else if (key == "planted") {
      f.planted = read_bits(tok, f.n, "planted");
    } else if (key == "seed") {
      f.seed = tok.next_u64("seed");
    } else if (key == "coord_bound") {
      f.coord_bound = tok.next_u64("coord_bound");
    } else if (key == "mode") {
      f.mode = tok.next("mode");
    } else {
      throw ParseError("unknown instance key '" + key + "'");
    }
  }
  if (f.basis.size() != f.n)
    throw ParseError("instance column count does not match n");
  if (f.kind != "cvp" && f.kind != "svp")
    throw ParseError("instance kind must be cvp or svp");
  if (f.kind == "cvp" && !f.target) throw ParseError("cvp instance needs a target");
  if (f.kind == "svp" && f.target) throw ParseError("svp instance cannot carry a target");
  return f;
}

GraphFile make_graph_file(const KPartiteGraph& g) {
  GraphFile f;
  f.kind = "clique";
  f.p = 2;
  f.k = g.k;
  f.n = g.origin.n;
  f.scale = g.scale;
  f.threshold_scaled = g.threshold_scaled;
  f.parts = g.parts;
  f.blocks = g.origin.blocks;
  for (std::size_t i1 = 0; i1 < g.k; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < g.k; ++i2) {
      f.subsets.push_back({i1, i2});
      f.weights.push_back(g.pair_w[g.pair_index(i1, i2)].a);
    }
  return f;
}

GraphFile make_graph_file(const PUniformHypergraph& h) {
  GraphFile f;
  f.kind = "hyperclique";
  f.p = h.p;
  f.k = h.k;
  f.n = h.origin.n;
  f.scale = h.scale;
  f.threshold_scaled = h.threshold_scaled;
  f.parts = h.parts;
  f.blocks = h.origin.blocks;
  f.subsets = h.part_subsets;
  f.weights = h.weights;
  return f;
}

void write_graph(std::ostream& os, const GraphFile& f) {
  os << "cvplat-graph v1\n";
  os << "kind " << f.kind << "\n";
  os << "p " << f.p << "\n";
  os << "k " << f.k << "\n";
  os << "n " << f.n << "\n";
  os << "scale " << to_string(f.scale) << "\n";
  os << "threshold_scaled " << to_string(f.threshold_scaled) << "\n";
  os << "parts";
  for (std::size_t s : f.parts) os << ' ' << s;
  os << "\n";
  for (const auto& [begin, end] : f.blocks)
    os << "block " << begin << ' ' << end << "\n";
  for (std::size_t s = 0; s < f.subsets.size(); ++s) {
    os << "subset";
    for (std::size_t part : f.subsets[s]) os << ' ' << part;
    os << "\n";
    write_ints(os, f.weights[s], 8);
  }
  os << "end\n";
}

GraphFile read_graph(std::istream& is) {
  Tokenizer tok{is};
  tok.expect("cvplat-graph");
  tok.expect("v1");
  GraphFile f;
  for (;;) {
    const std::string key = tok.next("graph key");
    if (key == "end") break;
    if (key == "kind") {
      f.kind = tok.next("kind");
    } else if (key == "p") {
      f.p = static_cast<unsigned>(tok.next_u64("p"));
    } else if (key == "k") {
      f.k = tok.next_u64("k");
    } else if (key == "n") {
      f.n = tok.next_u64("n");
    } else if (key == "scale") {
      f.scale = tok.next_int("scale");
    } else if (key == "threshold_scaled") {
      f.threshold_scaled = tok.next_int("threshold_scaled");
    } else if (key == "parts") {
      if (f.k == 0) throw ParseError("k must precede parts");
      for (std::size_t i = 0; i < f.k; ++i)
        f.parts.push_back(tok.next_u64("part size"));
    } else if (key == "block") {
      const std::size_t begin = tok.next_u64("block begin");
      const std::size_t end = tok.next_u64("block end");
      f.blocks.emplace_back(begin, end);
    } else if (key == "subset") {
      if (f.parts.size() != f.k || f.p == 0)
        throw ParseError("parts and p must precede subsets");
      std::vector<std::size_t> subset(f.p);
      std::size_t count = 1;
      for (std::size_t i = 0; i < f.p; ++i) {
        subset[i] = tok.next_u64("subset part");
        if (subset[i] >= f.k) throw ParseError("subset part out of range");
        count *= f.parts[subset[i]];
      }
      std::vector<Int> block(count);
      for (std::size_t i = 0; i < count; ++i) block[i] = tok.next_int("weight");
      f.subsets.push_back(std::move(subset));
      f.weights.push_back(std::move(block));
    } else {
      throw ParseError("unknown graph key '" + key + "'");
    }
  }
  return f;
}

void write_wcnf(std::ostream& os, const WcnfFormula& f) {
  os << "c cvplat-wcnf v1\n";
  os << "c p " << f.p << "\n";
  os << "c base_vars " << f.num_base_vars << "\n";
  os << "c scale " << to_string(f.scale) << "\n";
  os << "c base_weight " << to_string(f.base_weight) << "\n";
  os << "c offset " << to_string(f.offset) << "\n";
  os << "c threshold " << to_string(f.threshold) << "\n";
  os << "p wcnf " << f.num_vars << ' ' << f.clauses.size() << ' '
     << to_string(f.total_clause_weight() + 1) << "\n";
  for (const Clause& c : f.clauses) {
    os << to_string(c.weight);
    for (std::int32_t lit : c.lits) os << ' ' << lit;
    os << " 0\n";
  }
}

WcnfFormula read_wcnf(std::istream& is) {
  WcnfFormula f;
  f.scale = 1;
  bool have_base_vars = false;
  bool have_header = false;
  std::size_t expect_clauses = 0;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string key;
      if (!(ls >> key)) continue;
      std::string value;
      if (!(ls >> value)) continue;
      if (key == "p")
        f.p = static_cast<unsigned>(parse_int(value).get_ui());
      else if (key == "base_vars") {
        f.num_base_vars = parse_int(value).get_ui();
        have_base_vars = true;
      } else if (key == "scale")
        f.scale = parse_int(value);
      else if (key == "base_weight")
        f.base_weight = parse_int(value);
      else if (key == "offset")
        f.offset = parse_int(value);
      else if (key == "threshold")
        f.threshold = parse_int(value);
      continue;  // other comments are ignored
    }
    if (first == "p") {
      std::string fmt;
      if (!(ls >> fmt) || fmt != "wcnf") throw ParseError("expected 'p wcnf' header");
      std::string nv, nc;
      if (!(ls >> nv >> nc)) throw ParseError("short wcnf header");
      f.num_vars = parse_int(nv).get_ui();
      expect_clauses = parse_int(nc).get_ui();
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p wcnf' header");
    Clause c;
    c.weight = parse_int(first);
    std::string t;
    bool closed = false;
    while (ls >> t) {
      const Int lit = parse_int(t);
      if (lit == 0) {
        closed = true;
        break;
      }
      if (!lit.fits_slong_p()) throw ParseError("literal out of range");
      const long l = lit.get_si();
      const long var = l > 0 ? l : -l;
      if (var > static_cast<long>(f.num_vars))
        throw ParseError("literal references an undeclared variable");
      c.lits.push_back(static_cast<std::int32_t>(l));
    }
    if (!closed) throw ParseError("clause line missing terminating 0");
    f.clauses.push_back(std::move(c));
  }
  if (f.clauses.size() != expect_clauses)
    throw ParseError("wcnf clause count mismatch");
  if (!have_base_vars) f.num_base_vars = f.num_vars;
  return f;
}

void write_report(std::ostream& os, const SolveReport& r) {
  os << "cvplat-report v1\n";
  os << "method " << r.method << "\n";
  os << "dist_pow " << to_string(r.dist_pow) << "\n";
  os << "z " << r.z.size();
  for (std::uint8_t b : r.z) os << ' ' << int(b);
  os << "\n";
  if (r.scale) os << "scale " << to_string(*r.scale) << "\n";
  if (r.witness_picks) {
    os << "picks " << r.witness_picks->size();
    for (std::uint64_t v : *r.witness_picks) os << ' ' << v;
    os << "\n";
  }
  os << "end\n";
}

SolveReport read_report(std::istream& is) {
  Tokenizer tok{is};
  tok.expect("cvplat-report");
  tok.expect("v1");
  SolveReport r;
  for (;;) {
    const std::string key = tok.next("report key");
    if (key == "end") break;
    if (key == "method") {
      r.method = tok.next("method");
    } else if (key == "dist_pow") {
      r.dist_pow = tok.next_int("dist_pow");
    } else if (key == "z") {
      const std::size_t count = tok.next_u64("z length");
      r.z = read_bits(tok, count, "z");
    } else if (key == "scale") {
      r.scale = tok.next_int("scale");
    } else if (key == "picks") {
      const std::size_t count = tok.next_u64("picks length");
      std::vector<std::uint64_t> picks(count);
      for (std::size_t i = 0; i < count; ++i) picks[i] = tok.next_u64("pick");
      r.witness_picks = std::move(picks);
    } else {
      throw ParseError("unknown report key '" + key + "'");
    }
  }
  return r;
}

namespace {

template <typename T, typename WriteFn>
void write_to_path(const std::string& path, const T& value, WriteFn&& fn) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open '" + path + "' for writing");
  fn(os, value);
  os.flush();
  if (!os) throw ParseError("failed writing '" + path + "'");
}

template <typename ReadFn>
auto read_from_path(const std::string& path, ReadFn&& fn) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'");
  return fn(is);
}

}  // namespace

void write_instance_file(const std::string& path, const InstanceFile& f) {
  write_to_path(path, f, [](std::ostream& os, const InstanceFile& v) { write_instance(os, v); });
}
InstanceFile read_instance_file(const std::string& path) {
  return read_from_path(path, [](std::istream& is) { return read_instance(is); });
}
void write_graph_file(const std::string& path, const GraphFile& f) {
  write_to_path(path, f, [](std::ostream& os, const GraphFile& v) { write_graph(os, v); });
}
GraphFile read_graph_file(const std::string& path) {
  return read_from_path(path, [](std::istream& is) { return read_graph(is); });
}
void write_wcnf_file(const std::string& path, const WcnfFormula& f) {
  write_to_path(path, f, [](std::ostream& os, const WcnfFormula& v) { write_wcnf(os, v); });
}
WcnfFormula read_wcnf_file(const std::string& path) {
  return read_from_path(path, [](std::istream& is) { return read_wcnf(is); });
}
void write_report_file(const std::string& path, const SolveReport& r) {
  write_to_path(path, r, [](std::ostream& os, const SolveReport& v) { write_report(os, v); });
}
SolveReport read_report_file(const std::string& path) {
  return read_from_path(path, [](std::istream& is) { return read_report(is); });
}

}  // namespace cvplat
