#include "rtc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace rtc {

namespace {

std::vector<uint32_t> parse_uint_list(const std::string& s, char sep = ',') {
  std::vector<uint32_t> out;
  std::string cur;
  std::istringstream iss(s);
  while (std::getline(iss, cur, sep)) {
    try {
      size_t pos = 0;
      long v = std::stol(cur, &pos);
      while (pos < cur.size() && std::isspace(static_cast<unsigned char>(cur[pos]))) ++pos;
      if (pos != cur.size() || v < 0) throw ParseError("bad integer: " + cur);
      out.push_back(static_cast<uint32_t>(v));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer: " + cur);
    } catch (const std::out_of_range&) {
      throw ParseError("bad integer: " + cur);
    }
  }
  return out;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CodeSpec parse_code_spec(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("code spec: expected key=value, got: " + line);
    kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  for (const char* req : {"q", "n", "m", "support"})
    if (!kv.count(req)) throw ParseError(std::string("code spec: missing ") + req);

  uint32_t q = 0, n = 0;
  int m = 0;
  try {
    q = static_cast<uint32_t>(std::stoul(kv["q"]));
    n = static_cast<uint32_t>(std::stoul(kv["n"]));
    m = std::stoi(kv["m"]);
  } catch (const std::exception&) {
    throw ParseError("code spec: bad q/n/m");
  }
  if (m < 1) throw ParseError("code spec: m must be >= 1");

  std::shared_ptr<const ExtField> F;
  try {
    if (kv.count("modulus")) {
      GroundField K = GroundField::make(q);
      F = std::make_shared<const ExtField>(std::move(K), n, parse_uint_list(kv["modulus"]));
    } else {
      F = std::make_shared<const ExtField>(ExtField::make(q, n));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("code spec: ") + e.what());
  }

  FieldBasis alpha;
  if (kv.count("basis")) {
    std::istringstream rows(kv["basis"]);
    std::string row;
    while (std::getline(rows, row, ';')) {
      auto cs = parse_uint_list(strip(row));
      try {
        alpha.elems.push_back(F->from_coeffs(cs));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("code spec: basis: ") + e.what());
      }
    }
    if (alpha.elems.size() != n) throw ParseError("code spec: basis needs n rows");
  } else {
    alpha = power_basis(*F);
  }

  SupportSet S;
  S.m = m;
  std::istringstream tuples(kv["support"]);
  std::string tup;
  while (std::getline(tuples, tup, ';')) {
    tup = strip(tup);
    if (tup.size() < 2 || tup.front() != '(' || tup.back() != ')')
      throw ParseError("code spec: support tuple must look like (a,b): " + tup);
    auto xs = parse_uint_list(tup.substr(1, tup.size() - 2));
    if (static_cast<int>(xs.size()) != m) throw ParseError("code spec: support arity mismatch");
    MultiExp e(xs.begin(), xs.end());
    S.points.insert(std::move(e));
  }
  if (S.points.empty()) throw ParseError("code spec: empty support");

  try {
    return make_code_spec(std::move(F), std::move(alpha), std::move(S));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("code spec: ") + e.what());
  }
}

CodeSpec load_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_code_spec(in);
}

std::string emit_code_spec(const CodeSpec& spec) {
  std::ostringstream out;
  out << "q=" << spec.field->q() << "\n";
  out << "n=" << spec.field->n() << "\n";
  out << "m=" << spec.m << "\n";
  out << "modulus=";
  const auto& mod = spec.field->modulus();
  for (size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << mod[i];
  out << "\n";
  out << "basis=";
  for (size_t r = 0; r < spec.alpha.elems.size(); ++r) {
    if (r) out << ";";
    auto cs = spec.field->coeffs(spec.alpha.elems[r]);
    for (size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i];
  }
  out << "\n";
  out << "support=";
  bool first = true;
  for (const auto& s : spec.support.points) {
    if (!first) out << ";";
    first = false;
    out << "(";
    for (size_t j = 0; j < s.size(); ++j) out << (j ? "," : "") << s[j];
    out << ")";
  }
  out << "\n";
  return out.str();
}

Word parse_word(std::istream& in, const ExtField& F) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("word: missing header");
  int m = -1, n = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("order=", 0) == 0) m = std::stoi(tok.substr(6));
      else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
      else throw ParseError("word: bad header token: " + tok);
    }
  }
  if (m < 1 || n < 1) throw ParseError("word: header must carry order= and n=");
  if (n != static_cast<int>(F.n())) throw ParseError("word: n does not match the field");
  Word w = Word::zeros(m, n);
  std::string line;
  for (size_t i = 0; i < w.a.size(); ++i) {
    if (!std::getline(in, line)) throw ParseError("word: too few entry lines");
    auto cs = parse_uint_list(strip(line));
    try {
      w.a[i] = F.from_coeffs(cs);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("word: ") + e.what());
    }
  }
  return w;
}

Word load_word(const std::string& path, const ExtField& F) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_word(in, F);
}

std::string emit_word(const Word& w) {
  std::ostringstream out;
  out << "order=" << w.m << " n=" << w.n << "\n";
  for (const FF& x : w.a) {
    for (int i = 0; i < w.n; ++i) out << (i ? "," : "") << static_cast<int>(x.c[i]);
    out << "\n";
  }
  return out.str();
}

namespace {

std::string var_name(int m, int j) {
  if (m == 1) return "X";
  if (m == 2) return j == 0 ? "X" : "Y";
  return "X" + std::to_string(j + 1);
}

}  // namespace

std::string emit_poly(const ExtField& F, const MultilinPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : f.coeffs) {
    if (!first) out << " + ";
    first = false;
    out << "[";
    auto cs = F.coeffs(c);
    for (size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i];
    out << "]";
    for (int j = 0; j < f.m; ++j)
      out << "*" << var_name(f.m, j) << "^q^" << s[static_cast<size_t>(j)];
  }
  return out.str();
}

MultilinPoly parse_poly(const std::string& text, const ExtField& F, int m) {
  MultilinPoly f = ml_zero(m);
  std::string t = strip(text);
  if (t == "0" || t.empty()) return f;
  size_t pos = 0;
  while (pos < t.size()) {
    size_t plus = t.find(" + ", pos);
    std::string term = strip(plus == std::string::npos ? t.substr(pos) : t.substr(pos, plus - pos));
    pos = plus == std::string::npos ? t.size() : plus + 3;

    if (term.empty() || term.front() != '[') throw ParseError("poly: term must open with [");
    size_t close = term.find(']');
    if (close == std::string::npos) throw ParseError("poly: missing ] in term");
    auto cs = parse_uint_list(term.substr(1, close - 1));
    FF coeff;
    try {
      coeff = F.from_coeffs(cs);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("poly: ") + e.what());
    }

    MultiExp s(static_cast<size_t>(m), 0);
    std::string rest = term.substr(close + 1);
    std::istringstream factors(rest);
    std::string factor;
    int seen = 0;
    while (std::getline(factors, factor, '*')) {
      factor = strip(factor);
      if (factor.empty()) continue;
      size_t caret = factor.find("^q^");
      if (caret == std::string::npos) throw ParseError("poly: factor needs ^q^: " + factor);
      std::string var = factor.substr(0, caret);
      int exp = std::stoi(factor.substr(caret + 3));
      int j = -1;
      for (int cand = 0; cand < m; ++cand)
        if (var == var_name(m, cand)) j = cand;
      if (j < 0) throw ParseError("poly: unknown variable: " + var);
      s[static_cast<size_t>(j)] = exp;
      ++seen;
    }
    if (seen != m) throw ParseError("poly: every term must name all variables");
    ml_add_term(F, f, s, coeff);
  }
  return f;
}

MultilinPoly load_poly(const std::string& path, const ExtField& F, int m) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (!text.empty()) throw ParseError("poly: expected a single line");
    text = line;
  }
  return parse_poly(text, F, m);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

}  // namespace rtc
