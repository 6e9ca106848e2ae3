#include "adsv/transcript.hpp"

#include <cstring>

namespace adsv {

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::coefficients: return "coefficients";
    case BlockKind::vertex_list: return "vertex_list";
    case BlockKind::scalar_list: return "scalar_list";
  }
  return "?";
}

void ProofTranscript::add_coefficients(std::string label, DegreeBounds bounds, const std::vector<Fe>& coeffs) {
  if (coeffs.size() != block_size(bounds)) throw BlockShapeError("coefficient count does not match bounds");
  Block b{BlockKind::coefficients, std::move(label), std::move(bounds), {}};
  b.items.reserve(coeffs.size());
  for (const auto& c : coeffs) b.items.push_back(c.value());
  blocks_.push_back(std::move(b));
}

void ProofTranscript::add_vertices(std::string label, std::vector<std::uint64_t> items) {
  blocks_.push_back({BlockKind::vertex_list, std::move(label), {}, std::move(items)});
}

void ProofTranscript::add_scalars(std::string label, std::vector<std::uint64_t> items) {
  blocks_.push_back({BlockKind::scalar_list, std::move(label), {}, std::move(items)});
}

void ProofTranscript::add_scalars(std::string label, const std::vector<Fe>& items) {
  std::vector<std::uint64_t> raw;
  raw.reserve(items.size());
  for (const auto& x : items) raw.push_back(x.value());
  add_scalars(std::move(label), std::move(raw));
}

std::uint64_t ProofTranscript::element_count() const {
  std::uint64_t n = 0;
  for (const auto& b : blocks_) n += b.items.size();
  return n;
}

bool ProofTranscript::operator==(const ProofTranscript& o) const {
  if (modulus_ != o.modulus_ || blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto &a = blocks_[i], &b = o.blocks_[i];
    if (a.kind != b.kind || a.label != b.label || a.bounds != b.bounds || a.items != b.items) return false;
  }
  return true;
}

namespace {

constexpr char kMagic[] = "ADSVPRF1";

template <class T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

struct Cursor {
  const std::string& s;
  std::size_t pos;
  template <class T>
  T get() {
    if (pos + sizeof(T) > s.size()) throw TranscriptFormatError("truncated transcript file");
    T v;
    std::memcpy(&v, s.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
  }
  std::string bytes(std::size_t n) {
    if (pos + n > s.size()) throw TranscriptFormatError("truncated transcript file");
    std::string out = s.substr(pos, n);
    pos += n;
    return out;
  }
};

}  // namespace

std::string ProofTranscript::serialize() const {
  std::string out(kMagic, 8);
  put<std::uint64_t>(out, modulus_);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(blocks_.size()));
  for (const auto& b : blocks_) {
    put<std::uint8_t>(out, static_cast<std::uint8_t>(b.kind));
    put<std::uint16_t>(out, static_cast<std::uint16_t>(b.label.size()));
    out += b.label;
    put<std::uint32_t>(out, static_cast<std::uint32_t>(b.bounds.size()));
    for (auto d : b.bounds) put<std::uint32_t>(out, d);
    put<std::uint64_t>(out, b.items.size());
    for (auto x : b.items) put<std::uint64_t>(out, x);
  }
  return out;
}

ProofTranscript ProofTranscript::deserialize(const std::string& bytes) {
  if (bytes.size() < 8 || bytes.compare(0, 8, kMagic) != 0) throw TranscriptFormatError("bad transcript magic");
  Cursor c{bytes, 8};
  ProofTranscript t(c.get<std::uint64_t>());
  auto nblocks = c.get<std::uint32_t>();
  for (std::uint32_t i = 0; i < nblocks; ++i) {
    Block b;
    auto kind = c.get<std::uint8_t>();
    if (kind < 1 || kind > 3) throw TranscriptFormatError("bad block kind");
    b.kind = static_cast<BlockKind>(kind);
    b.label = c.bytes(c.get<std::uint16_t>());
    auto nb = c.get<std::uint32_t>();
    for (std::uint32_t j = 0; j < nb; ++j) b.bounds.push_back(c.get<std::uint32_t>());
    auto ni = c.get<std::uint64_t>();
    if (ni > (bytes.size() - c.pos) / 8) throw TranscriptFormatError("block length exceeds file");
    b.items.resize(ni);
    for (auto& x : b.items) x = c.get<std::uint64_t>();
    t.blocks_.push_back(std::move(b));
  }
  if (c.pos != bytes.size()) throw TranscriptFormatError("trailing bytes after transcript");
  return t;
}

const Block& TranscriptReader::expect(BlockKind kind, const std::string& label) {
  if (next_ >= t_.blocks().size()) throw Rejection("transcript ended before block '" + label + "'");
  const Block& b = t_.blocks()[next_++];
  if (b.kind != kind || b.label != label) {
    throw Rejection("expected " + to_string(kind) + " block '" + label + "', got '" + b.label + "'");
  }
  return b;
}

}  // namespace adsv
