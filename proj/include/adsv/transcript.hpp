#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "adsv/extension.hpp"
#include "adsv/field.hpp"

namespace adsv {

enum class BlockKind : std::uint8_t { coefficients = 1, vertex_list = 2, scalar_list = 3 };

std::string to_string(BlockKind k);

// Separates groups inside a vertex list.
inline constexpr std::uint64_t kDelimiter = std::numeric_limits<std::uint64_t>::max();

struct Block {
  BlockKind kind;
  std::string label;
  DegreeBounds bounds;  // coefficient blocks only
  std::vector<std::uint64_t> items;
};

// Raised inside a Verifier when a check fails; the runner turns it into a Reject outcome.
class Rejection : public std::runtime_error {
 public:
  explicit Rejection(const std::string& check, int round = -1)
      : std::runtime_error(check), check_(check), round_(round) {}
  const std::string& check() const { return check_; }
  int round() const { return round_; }

 private:
  std::string check_;
  int round_;
};

class TranscriptFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Prover's one-shot help message.
class ProofTranscript {
 public:
  ProofTranscript() = default;
  explicit ProofTranscript(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<Block>& blocks() { return blocks_; }

  void add_coefficients(std::string label, DegreeBounds bounds, const std::vector<Fe>& coeffs);
  void add_vertices(std::string label, std::vector<std::uint64_t> items);
  void add_scalars(std::string label, std::vector<std::uint64_t> items);
  void add_scalars(std::string label, const std::vector<Fe>& items);

  // Every serialized item, delimiters included.
  std::uint64_t element_count() const;

  std::string serialize() const;
  static ProofTranscript deserialize(const std::string& bytes);

  bool operator==(const ProofTranscript& o) const;

 private:
  std::uint64_t modulus_ = 0;
  std::vector<Block> blocks_;
};

// Forward-only cursor handed to Verifiers.
class TranscriptReader {
 public:
  explicit TranscriptReader(const ProofTranscript& t) : t_(t) {}

  // Next block, which must have the given kind and label; throws Rejection otherwise.
  const Block& expect(BlockKind kind, const std::string& label);
  bool at_end() const { return next_ == t_.blocks().size(); }

 private:
  const ProofTranscript& t_;
  std::size_t next_ = 0;
};

}  // namespace adsv
