#include "unitary/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace unitary {

namespace {

Field pick_field(const ArithFunc& f) {
  for (long n = 1; n <= f.bound(); ++n) {
    if (!f[n].is_real()) return Field::gaussian;
  }
  return Field::rational;
}

std::string field_name(Field f) {
  return f == Field::rational ? "rational" : "gaussian";
}

// Reads the next non-empty line into `line`; false at EOF.
bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      // Trim a trailing CR from files written on other platforms.
      if (line.back() == '\r') line.pop_back();
      return true;
    }
  }
  return false;
}

}  // namespace

void write_func(std::ostream& os, const ArithFunc& f,
                std::optional<Field> field) {
  Field mode = field.value_or(pick_field(f));
  os << "# bound=" << f.bound() << " field=" << field_name(mode) << "\n";
  for (long n = 1; n <= f.bound(); ++n) {
    if (!f[n].is_zero()) os << n << " " << f[n].str() << "\n";
  }
}

std::optional<ArithFunc> read_func(std::istream& is) {
  std::string line;
  if (!next_content_line(is, line)) return std::nullopt;

  long bound = 0;
  char fieldbuf[16] = {0};
  if (std::sscanf(line.c_str(), "# bound=%ld field=%15s", &bound, fieldbuf) !=
      2) {
    throw std::invalid_argument("serialization: bad header line: " + line);
  }
  std::string fieldname(fieldbuf);
  if (fieldname != "rational" && fieldname != "gaussian") {
    throw std::invalid_argument("serialization: unknown field: " + fieldname);
  }
  if (bound < 1) throw std::invalid_argument("serialization: bad bound");

  ArithFunc f(bound);
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) {
      break;  // blank line terminates the block
    }
    std::istringstream ls(line);
    long index = 0;
    std::string coeff_text;
    if (!(ls >> index >> coeff_text)) {
      throw std::invalid_argument("serialization: bad entry line: " + line);
    }
    if (index < 1 || index > bound) {
      throw std::invalid_argument("serialization: index outside bound: " + line);
    }
    Coeff c = Coeff::parse(coeff_text);
    if (fieldname == "rational" && !c.is_real()) {
      throw std::invalid_argument(
          "serialization: gaussian value in a rational block");
    }
    f.set(index, std::move(c));
  }
  return f;
}

std::vector<ArithFunc> read_blocks(std::istream& is) {
  std::vector<ArithFunc> funcs;
  while (auto f = read_func(is)) funcs.push_back(std::move(*f));
  return funcs;
}

void write_blocks(std::ostream& os, const std::vector<ArithFunc>& funcs) {
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    if (i > 0) os << "\n";
    write_func(os, funcs[i]);
  }
}

ArithFunc read_func_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  auto f = read_func(in);
  if (!f) throw std::invalid_argument("no function block in " + path);
  return std::move(*f);
}

void write_gamma_table(std::ostream& os, const GammaTable& table) {
  bool first = true;
  for (const auto& [key, img] : table.images()) {
    if (!first) os << "\n";
    first = false;
    os << "# gamma i=" << key.first << " j=" << key.second << "\n";
    write_func(os, img);
  }
}

GammaTable read_gamma_table(std::istream& is) {
  std::map<std::pair<long, long>, ArithFunc> images;
  std::string line;
  long bound = -1;
  while (next_content_line(is, line)) {
    long i = 0, j = 0;
    if (std::sscanf(line.c_str(), "# gamma i=%ld j=%ld", &i, &j) != 2) {
      throw std::invalid_argument("gamma table: bad annotation line: " + line);
    }
    auto img = read_func(is);
    if (!img) throw std::invalid_argument("gamma table: missing block");
    if (bound < 0) bound = img->bound();
    if (!images.emplace(std::make_pair(i, j), std::move(*img)).second) {
      throw std::invalid_argument("gamma table: duplicate entry");
    }
  }
  if (bound < 0) throw std::invalid_argument("gamma table: empty file");
  return GammaTable(std::move(images), bound);
}

void write_certificate(std::ostream& os, const FactorizationCertificate& cert) {
  write_func(os, cert.target);
  for (const auto& factor : cert.factors) {
    os << "\n";
    write_func(os, factor);
  }
  os << "verified: " << (cert.verified ? "true" : "false") << "\n";
}

void write_transcript(std::ostream& os, const NfgTranscript& t) {
  for (const auto& line : t.lines) os << line << "\n";
}

}  // namespace unitary
