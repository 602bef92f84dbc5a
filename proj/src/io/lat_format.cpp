#include <fstream>
#include <sstream>

#include "latnorm/error.hpp"
#include "latnorm/io.hpp"

namespace latnorm {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) {
    if (tok.front() == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

FiniteLattice parse_lattice(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> labels;
  bool have_elements = false;
  std::vector<CoverPair> covers;
  std::size_t lineno = 0;
  auto lookup = [&](const std::string& label, std::size_t line) -> Elem {
    for (Elem i = 0; i < labels.size(); ++i)
      if (labels[i] == label) return i;
    throw LatticeError(ErrorCode::UnknownLabel, "undeclared label '" + label + "'", line);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "format") {
      if (tok.size() != 2 || tok[1] != "1")
        throw LatticeError(ErrorCode::SyntaxError, "expected 'format 1'", lineno);
      if (have_elements) throw LatticeError(ErrorCode::SyntaxError, "format must precede elements", lineno);
    } else if (tok[0] == "elements") {
      if (have_elements) throw LatticeError(ErrorCode::SyntaxError, "second elements line", lineno);
      if (tok.size() < 2) throw LatticeError(ErrorCode::SyntaxError, "elements line lists no labels", lineno);
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!is_valid_label(tok[i]))
          throw LatticeError(ErrorCode::InvalidLabel, "invalid label '" + tok[i] + "'", lineno);
        for (const auto& seen : labels)
          if (seen == tok[i]) throw LatticeError(ErrorCode::DuplicateLabel, "label '" + tok[i] + "' repeated", lineno);
        labels.push_back(tok[i]);
      }
      have_elements = true;
    } else if (tok[0] == "cover") {
      if (!have_elements) throw LatticeError(ErrorCode::SyntaxError, "cover before elements line", lineno);
      if (tok.size() != 3) throw LatticeError(ErrorCode::SyntaxError, "expected 'cover LOWER UPPER'", lineno);
      covers.emplace_back(lookup(tok[1], lineno), lookup(tok[2], lineno));
    } else {
      throw LatticeError(ErrorCode::SyntaxError, "unknown directive '" + tok[0] + "'", lineno);
    }
  }
  if (!have_elements) throw LatticeError(ErrorCode::SyntaxError, "missing elements line", lineno ? lineno : 1);
  return FiniteLattice::from_cover_indices(std::move(labels), covers);
}

std::string emit_lattice(const FiniteLattice& L) {
  std::string out = "format 1\nelements";
  for (const auto& l : L.labels()) out += " " + l;
  out += "\n";
  for (auto [x, y] : L.cover_pairs()) out += "cover " + L.label(x) + " " + L.label(y) + "\n";
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatticeError(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LatticeError(ErrorCode::InvalidArgument, "cannot write " + path);
  out << content;
}

}  // namespace latnorm
