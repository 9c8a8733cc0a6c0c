#include "sectio/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sectio::io {

namespace {

using njson = nlohmann::json;

njson parse(const std::string& text) {
  njson j = njson::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorCode::MalformedInput, "invalid JSON");
  return j;
}

void check_keys(const njson& j, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional, const char* where) {
  if (!j.is_object())
    raise(ErrorCode::MalformedInput, std::string(where) + " must be a JSON object");
  for (const char* k : required)
    if (!j.contains(k))
      raise(ErrorCode::MalformedInput,
            std::string(where) + " is missing required key \"" + k + "\"");
  for (const auto& [key, value] : j.items()) {
    const bool known =
        std::any_of(required.begin(), required.end(),
                    [&](const char* k) { return key == k; }) ||
        std::any_of(optional.begin(), optional.end(),
                    [&](const char* k) { return key == k; });
    if (!known)
      raise(ErrorCode::MalformedInput,
            std::string(where) + " has unknown key \"" + key + "\"");
  }
}

int64_t get_int(const njson& j, const char* key, const char* where) {
  if (!j.at(key).is_number_integer())
    raise(ErrorCode::MalformedInput,
          std::string(where) + " key \"" + key + "\" must be an integer");
  return j.at(key).get<int64_t>();
}

// Bounds for counts, precisions, and exponents; keeps int32 casts honest.
constexpr int64_t kDimensionCap = int64_t{1} << 24;

int32_t get_small(const njson& j, const char* key, const char* where) {
  const int64_t v = get_int(j, key, where);
  if (v < -kDimensionCap || v > kDimensionCap)
    raise(ErrorCode::MalformedInput,
          std::string(where) + " key \"" + key + "\" is out of range");
  return static_cast<int32_t>(v);
}

int32_t small_exponent(int64_t v, const char* where) {
  if (v < 0) raise(ErrorCode::MalformedInput, "exponents must be nonnegative");
  if (v > kDimensionCap)
    raise(ErrorCode::MalformedInput, std::string(where) + " exponent is out of range");
  return static_cast<int32_t>(v);
}

std::vector<int64_t> get_int_array(const njson& j, const char* where) {
  if (!j.is_array())
    raise(ErrorCode::MalformedInput, std::string(where) + " must be an array");
  std::vector<int64_t> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer())
      raise(ErrorCode::MalformedInput,
            std::string(where) + " entries must be integers");
    out.push_back(x.get<int64_t>());
  }
  return out;
}

Field field_from(const njson& j) {
  check_keys(j, {"p", "e"}, {"modulus"}, "field");
  const int64_t p = get_int(j, "p", "field");
  const int64_t e = get_int(j, "e", "field");
  std::vector<int64_t> modulus;
  if (j.contains("modulus")) modulus = get_int_array(j.at("modulus"), "field modulus");
  return make_field(p, static_cast<int>(e), modulus);
}

njson field_to(const Field& F) {
  njson j;
  j["p"] = F.p();
  j["e"] = F.e();
  if (F.e() > 1) j["modulus"] = F.modulus();
  return j;
}

FieldElem elem_from(const njson& j, const Field& F, const char* where) {
  return F.from_coeffs(get_int_array(j, where));
}

njson elem_to(const Field& F, FieldElem x) { return njson(F.coeffs(x)); }

bool grlex_less(const Expo& a, const Expo& b) {
  const int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly poly_from(const njson& j, const Field& F, const char* where) {
  check_keys(j, {"n", "terms"}, {}, where);
  const int64_t n = get_int(j, "n", where);
  if (n < 0 || n > 16)
    raise(ErrorCode::MalformedInput, "variable count out of range");
  MultiPoly A(F, static_cast<int>(n));
  if (!j.at("terms").is_array())
    raise(ErrorCode::MalformedInput, std::string(where) + " terms must be an array");
  std::set<Expo> seen;
  for (const auto& t : j.at("terms")) {
    check_keys(t, {"e", "c"}, {}, "term");
    const std::vector<int64_t> ev = get_int_array(t.at("e"), "term exponent");
    if (ev.size() != static_cast<size_t>(n) + 1)
      raise(ErrorCode::MalformedInput, "term exponent vector must have n+1 entries");
    Expo e(ev.size());
    for (size_t k = 0; k < ev.size(); ++k) e[k] = small_exponent(ev[k], where);
    if (!seen.insert(e).second)
      raise(ErrorCode::MalformedInput, "duplicate term exponent vector");
    A.set(e, elem_from(t.at("c"), F, "term coefficient"));
  }
  return A;
}

njson poly_to(const MultiPoly& A) {
  std::vector<Expo> order;
  order.reserve(A.terms().size());
  for (const auto& [e, c] : A.terms()) order.push_back(e);
  std::sort(order.begin(), order.end(), grlex_less);
  njson terms = njson::array();
  for (const Expo& e : order) {
    njson t;
    t["e"] = e;
    t["c"] = elem_to(A.field(), A.coeff(e));
    terms.push_back(std::move(t));
  }
  njson j;
  j["n"] = A.nvars();
  j["terms"] = std::move(terms);
  return j;
}

std::string dump(const njson& j) { return j.dump(2) + "\n"; }

}  // namespace

Field import_field(const std::string& text) { return field_from(parse(text)); }

std::string export_field(const Field& F) { return dump(field_to(F)); }

MultiPoly import_poly(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"field", "n", "terms"}, {}, "polynomial file");
  const Field F = field_from(j.at("field"));
  njson sub;
  sub["n"] = j.at("n");
  sub["terms"] = j.at("terms");
  return poly_from(sub, F, "polynomial file");
}

std::string export_poly(const MultiPoly& A) {
  njson j = poly_to(A);
  j["field"] = field_to(A.field());
  return dump(j);
}

TruncatedSeries import_series(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"field", "n", "prec", "terms"}, {}, "series file");
  const Field F = field_from(j.at("field"));
  const int64_t n = get_int(j, "n", "series file");
  const int32_t prec = get_small(j, "prec", "series file");
  if (n < 1 || n > 16) raise(ErrorCode::MalformedInput, "series variable count out of range");
  if (prec < 0) raise(ErrorCode::MalformedInput, "precision must be nonnegative");
  TruncatedSeries f(F, static_cast<int>(n), prec);
  if (!j.at("terms").is_array())
    raise(ErrorCode::MalformedInput, "series terms must be an array");
  std::set<Expo> seen;
  for (const auto& t : j.at("terms")) {
    check_keys(t, {"e", "c"}, {}, "term");
    const std::vector<int64_t> ev = get_int_array(t.at("e"), "term exponent");
    if (ev.size() != static_cast<size_t>(n))
      raise(ErrorCode::MalformedInput, "series exponent vector must have n entries");
    Expo e(ev.size());
    int64_t deg = 0;
    for (size_t k = 0; k < ev.size(); ++k) {
      e[k] = small_exponent(ev[k], "series file");
      deg += ev[k];
    }
    if (deg >= prec)
      raise(ErrorCode::MalformedInput,
            "term of total degree " + std::to_string(deg) +
                " at or beyond the declared precision " + std::to_string(prec));
    if (!seen.insert(e).second)
      raise(ErrorCode::MalformedInput, "duplicate term exponent vector");
    f.set(e, elem_from(t.at("c"), F, "term coefficient"));
  }
  return f;
}

std::string export_series(const TruncatedSeries& f) {
  std::vector<Expo> order;
  order.reserve(f.terms().size());
  for (const auto& [e, c] : f.terms()) order.push_back(e);
  std::sort(order.begin(), order.end(), grlex_less);
  njson terms = njson::array();
  for (const Expo& e : order) {
    njson t;
    t["e"] = e;
    t["c"] = elem_to(f.field(), f.coeff(e));
    terms.push_back(std::move(t));
  }
  njson j;
  j["field"] = field_to(f.field());
  j["n"] = f.nvars();
  j["prec"] = f.prec();
  j["terms"] = std::move(terms);
  return dump(j);
}

Branch import_branch(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"field", "E", "y0"}, {}, "branch file");
  const Field F = field_from(j.at("field"));
  MultiPoly E = poly_from(j.at("E"), F, "branch annihilator");
  const FieldElem y0 = elem_from(j.at("y0"), F, "y0");
  return make_branch(std::move(E), y0);
}

std::string export_branch(const Branch& b) {
  njson j;
  j["field"] = field_to(b.E.field());
  j["E"] = poly_to(b.E);
  j["y0"] = elem_to(b.E.field(), b.y0);
  return dump(j);
}

AnnihilatorCertificate import_certificate(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"field", "N", "coeffs"},
             {"verified_order", "search_degree", "bound"}, "certificate file");
  const Field F = field_from(j.at("field"));
  const int64_t N = get_int(j, "N", "certificate");
  if (!j.at("coeffs").is_array() ||
      j.at("coeffs").size() != static_cast<size_t>(N) + 1)
    raise(ErrorCode::MalformedInput, "certificate must list N+1 coefficient polynomials");
  std::vector<UniPoly> coeffs;
  for (const auto& cj : j.at("coeffs")) {
    if (!cj.is_array())
      raise(ErrorCode::MalformedInput, "coefficient polynomial must be an array");
    UniPoly c;
    for (const auto& x : cj) c.c.push_back(elem_from(x, F, "certificate coefficient"));
    coeffs.push_back(std::move(c));
  }
  if (coeffs.back().is_zero())
    raise(ErrorCode::MalformedInput, "leading coefficient polynomial must be nonzero");
  AnnihilatorCertificate cert{make_linearized(F, std::move(coeffs)), 0, 0, 0};
  cert.N_bound_used = cert.L.p_degree();
  if (j.contains("verified_order"))
    cert.verified_order = get_small(j, "verified_order", "certificate");
  if (j.contains("search_degree"))
    cert.search_degree = get_small(j, "search_degree", "certificate");
  if (j.contains("bound")) cert.N_bound_used = import_bound_report(j.at("bound").dump()).N_effective;
  return cert;
}

std::string export_certificate(const AnnihilatorCertificate& cert,
                               const BoundReport* bounds) {
  const Field& F = cert.L.F;
  njson coeffs = njson::array();
  for (const UniPoly& c : cert.L.coeffs) {
    njson cj = njson::array();
    for (FieldElem x : c.c) cj.push_back(elem_to(F, x));
    coeffs.push_back(std::move(cj));
  }
  njson j;
  j["field"] = field_to(F);
  j["N"] = cert.L.p_degree();
  j["coeffs"] = std::move(coeffs);
  j["verified_order"] = cert.verified_order;
  j["search_degree"] = cert.search_degree;
  if (bounds) {
    njson b;
    b["N_closed"] = bounds->N_closed;
    b["N_box"] = bounds->N_box;
    b["N_diag"] = bounds->N_diag;
    b["N_effective"] = bounds->N_effective;
    j["bound"] = std::move(b);
  }
  return dump(j);
}

BoundReport import_bound_report(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"N_closed", "N_box", "N_diag", "N_effective"}, {}, "bound report");
  BoundReport r;
  r.N_closed = get_int(j, "N_closed", "bound report");
  r.N_box = get_int(j, "N_box", "bound report");
  r.N_diag = get_int(j, "N_diag", "bound report");
  r.N_effective = get_int(j, "N_effective", "bound report");
  return r;
}

std::string export_bound_report(const BoundReport& r) {
  njson j;
  j["N_closed"] = r.N_closed;
  j["N_box"] = r.N_box;
  j["N_diag"] = r.N_diag;
  j["N_effective"] = r.N_effective;
  return dump(j);
}

Dfao import_dfao(const std::string& text) {
  const njson j = parse(text);
  check_keys(j, {"field", "p", "n", "initial", "states", "transitions"}, {},
             "automaton file");
  const Field F = field_from(j.at("field"));
  Dfao M{F};
  M.p = get_small(j, "p", "automaton");
  M.n = get_small(j, "n", "automaton");
  if (M.p != F.p()) raise(ErrorCode::MalformedInput, "radix must equal the characteristic");
  if (M.n < 1 || M.n > 16)
    raise(ErrorCode::MalformedInput, "automaton variable count out of range");
  M.initial = get_small(j, "initial", "automaton");

  if (!j.at("states").is_array() || j.at("states").empty())
    raise(ErrorCode::MalformedInput, "automaton needs at least one state");
  for (const auto& sj : j.at("states")) {
    check_keys(sj, {"vector", "output"}, {}, "automaton state");
    std::vector<FieldElem> vec;
    if (!sj.at("vector").is_array())
      raise(ErrorCode::MalformedInput, "state vector must be an array");
    for (const auto& x : sj.at("vector")) vec.push_back(elem_from(x, F, "state vector"));
    M.state_vectors.push_back(std::move(vec));
    M.outputs.push_back(elem_from(sj.at("output"), F, "state output"));
  }
  const int32_t count = static_cast<int32_t>(M.state_vectors.size());
  if (M.initial < 0 || M.initial >= count)
    raise(ErrorCode::MalformedInput, "initial state out of range");
  int64_t alphabet = 1;
  for (int32_t k = 0; k < M.n; ++k) {
    alphabet *= M.p;
    if (alphabet > (int64_t{1} << 20))
      raise(ErrorCode::MalformedInput, "digit alphabet too large");
  }
  for (size_t i = 1; i < M.state_vectors.size(); ++i)
    if (M.state_vectors[i].size() != M.state_vectors[0].size())
      raise(ErrorCode::MalformedInput, "state vectors must have equal length");

  const int64_t digit_count = M.digit_count();
  M.transitions.assign(static_cast<size_t>(count),
                       std::vector<int32_t>(static_cast<size_t>(digit_count), -1));
  if (!j.at("transitions").is_array())
    raise(ErrorCode::MalformedInput, "transitions must be an array");
  for (const auto& tj : j.at("transitions")) {
    if (!tj.is_array() || tj.size() != 3)
      raise(ErrorCode::MalformedInput, "transition must be [from, [digits], to]");
    const int64_t from = tj.at(0).is_number_integer() ? tj.at(0).get<int64_t>() : -1;
    const int64_t to = tj.at(2).is_number_integer() ? tj.at(2).get<int64_t>() : -1;
    const std::vector<int64_t> digits = get_int_array(tj.at(1), "transition digits");
    if (from < 0 || from >= count || to < 0 || to >= count)
      raise(ErrorCode::MalformedInput, "transition state out of range");
    if (digits.size() != static_cast<size_t>(M.n))
      raise(ErrorCode::MalformedInput, "transition digit tuple must have n entries");
    int64_t code = 0, weight = 1;
    for (int64_t d : digits) {
      if (d < 0 || d >= M.p)
        raise(ErrorCode::MalformedInput, "transition digit out of range");
      code += d * weight;
      weight *= M.p;
    }
    if (M.transitions[static_cast<size_t>(from)][static_cast<size_t>(code)] != -1)
      raise(ErrorCode::MalformedInput, "duplicate transition");
    M.transitions[static_cast<size_t>(from)][static_cast<size_t>(code)] =
        static_cast<int32_t>(to);
  }
  for (const auto& row : M.transitions)
    for (int32_t target : row)
      if (target < 0)
        raise(ErrorCode::MalformedInput, "transition map must be total");
  return M;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::MalformedInput, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::MalformedInput, "cannot write file: " + path);
  out << text;
}

}  // namespace sectio::io

namespace sectio {

// JSON and DOT serialization for automata; kept with the other emitters so
// formats stay in one place.
std::string export_dfao(const Dfao& M, DfaoFormat format) {
  using njson = nlohmann::json;
  if (format == DfaoFormat::json) {
    njson j;
    njson fj;
    fj["p"] = M.F.p();
    fj["e"] = M.F.e();
    if (M.F.e() > 1) fj["modulus"] = M.F.modulus();
    j["field"] = std::move(fj);
    j["p"] = M.p;
    j["n"] = M.n;
    j["initial"] = M.initial;
    njson states = njson::array();
    for (size_t i = 0; i < M.state_vectors.size(); ++i) {
      njson sj;
      njson vec = njson::array();
      for (FieldElem x : M.state_vectors[i]) vec.push_back(njson(M.F.coeffs(x)));
      sj["vector"] = std::move(vec);
      sj["output"] = njson(M.F.coeffs(M.outputs[i]));
      states.push_back(std::move(sj));
    }
    j["states"] = std::move(states);
    njson trans = njson::array();
    for (size_t s = 0; s < M.transitions.size(); ++s) {
      for (size_t code = 0; code < M.transitions[s].size(); ++code) {
        njson digits = njson::array();
        int64_t c = static_cast<int64_t>(code);
        for (int32_t k = 0; k < M.n; ++k) {
          digits.push_back(c % M.p);
          c /= M.p;
        }
        trans.push_back(njson::array(
            {static_cast<int64_t>(s), std::move(digits), M.transitions[s][code]}));
      }
    }
    j["transitions"] = std::move(trans);
    return j.dump(2) + "\n";
  }

  // DOT: one node per state labeled by its output, edges grouped by target.
  std::ostringstream out;
  out << "digraph dfao {\n  rankdir=LR;\n";
  auto elem_str = [&](FieldElem x) {
    const auto cs = M.F.coeffs(x);
    std::ostringstream s;
    if (cs.size() == 1) {
      s << cs[0];
    } else {
      s << "[";
      for (size_t i = 0; i < cs.size(); ++i) s << (i ? "," : "") << cs[i];
      s << "]";
    }
    return s.str();
  };
  for (size_t s = 0; s < M.state_vectors.size(); ++s) {
    out << "  s" << s << " [label=\"s" << s << " / " << elem_str(M.outputs[s])
        << "\"";
    if (static_cast<int32_t>(s) == M.initial) out << " shape=doublecircle";
    out << "];\n";
  }
  for (size_t s = 0; s < M.transitions.size(); ++s) {
    std::map<int32_t, std::vector<std::string>> grouped;
    for (size_t code = 0; code < M.transitions[s].size(); ++code) {
      std::ostringstream label;
      int64_t c = static_cast<int64_t>(code);
      label << "(";
      for (int32_t k = 0; k < M.n; ++k) {
        label << (k ? "," : "") << c % M.p;
        c /= M.p;
      }
      label << ")";
      grouped[M.transitions[s][code]].push_back(label.str());
    }
    for (const auto& [target, labels] : grouped) {
      out << "  s" << s << " -> s" << target << " [label=\"";
      for (size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sectio
