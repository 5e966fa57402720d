#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unitary/arith_func.hpp"
#include "unitary/factorization.hpp"
#include "unitary/structure.hpp"

namespace unitary {

enum class Field { rational, gaussian };

// Text format, one function per block:
//   # bound=<N> field=<rational|gaussian>
//   <index> <coefficient>
// with zero coefficients omitted and coefficients as `p/q` or `p/q+r/si`.
// Blocks in a multi-function file are separated by blank lines.

// Picks `gaussian` automatically when any value has an imaginary part,
// unless a field is forced.
void write_func(std::ostream& os, const ArithFunc& f,
                std::optional<Field> field = std::nullopt);

// Reads one block. Returns nullopt at end of input. Throws
// std::invalid_argument on malformed input.
std::optional<ArithFunc> read_func(std::istream& is);

// Reads all remaining blocks.
std::vector<ArithFunc> read_blocks(std::istream& is);
void write_blocks(std::ostream& os, const std::vector<ArithFunc>& funcs);

ArithFunc read_func_file(const std::string& path);

// Gamma tables: each entry is an annotation line
//   # gamma i=<i> j=<j>
// followed by a standard function block.
void write_gamma_table(std::ostream& os, const GammaTable& table);
GammaTable read_gamma_table(std::istream& is);

// Certificates: target block, factor blocks, then `verified: true|false`.
void write_certificate(std::ostream& os, const FactorizationCertificate& cert);

void write_transcript(std::ostream& os, const NfgTranscript& t);

}  // namespace unitary
