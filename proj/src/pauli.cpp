#include "ppart/pauli.hpp"

#include <bit>

#include "ppart/errors.hpp"

namespace ppart {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.size() != q.size())
    throw DimensionError("pauli strings have different lengths: " +
                         std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()));
}

}  // namespace

char to_char(PauliOp op) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(op)];
}

PauliProduct multiply(PauliOp a, PauliOp b) {
  using enum PauliOp;
  if (a == I) return {b, 0};
  if (b == I) return {a, 0};
  if (a == b) return {I, 0};
  // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  auto cyclic_next = [](PauliOp p) {
    return p == X ? Y : p == Y ? Z : X;
  };
  const PauliOp third = static_cast<PauliOp>(6 - static_cast<int>(a) -
                                             static_cast<int>(b));
  return {third, cyclic_next(a) == b ? 1 : 3};
}

PauliString::PauliString(std::size_t n)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0) {}

PauliString::PauliString(const std::vector<PauliOp>& ops)
    : PauliString(ops.size()) {
  for (std::size_t t = 0; t < ops.size(); ++t) set(t, ops[t]);
}

PauliOp PauliString::op(std::size_t t) const {
  if (t >= n_) throw ArgumentError("qubit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (t % kWordBits);
  const bool x = x_[t / kWordBits] & mask;
  const bool z = z_[t / kWordBits] & mask;
  if (x && z) return PauliOp::Y;
  if (x) return PauliOp::X;
  if (z) return PauliOp::Z;
  return PauliOp::I;
}

void PauliString::set(std::size_t t, PauliOp op) {
  if (t >= n_) throw ArgumentError("qubit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (t % kWordBits);
  const bool x = op == PauliOp::X || op == PauliOp::Y;
  const bool z = op == PauliOp::Z || op == PauliOp::Y;
  auto& xw = x_[t / kWordBits];
  auto& zw = z_[t / kWordBits];
  xw = x ? (xw | mask) : (xw & ~mask);
  zw = z ? (zw | mask) : (zw & ~mask);
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) w += std::popcount(x_[k] | z_[k]);
  return w;
}

std::size_t PauliString::count(PauliOp op) const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) {
    const std::uint64_t x = x_[k], z = z_[k];
    switch (op) {
      case PauliOp::X:
        c += std::popcount(x & ~z);
        break;
      case PauliOp::Y:
        c += std::popcount(x & z);
        break;
      case PauliOp::Z:
        c += std::popcount(~x & z);
        break;
      case PauliOp::I:
        break;
    }
  }
  if (op == PauliOp::I) c = n_ - weight();
  return c;
}

bool PauliString::is_diagonal() const {
  for (auto w : x_)
    if (w != 0) return false;
  return true;
}

std::string PauliString::to_string() const {
  std::string out(n_, 'I');
  for (std::size_t t = 0; t < n_; ++t) out[t] = to_char(op(t));
  return out;
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
  return os << p.to_string();
}

PauliString parse_pauli(std::string_view text) {
  if (text.empty()) throw ParseError("empty pauli string");
  PauliString p(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    switch (text[t]) {
      case 'I':
        break;
      case 'X':
        p.set(t, PauliOp::X);
        break;
      case 'Y':
        p.set(t, PauliOp::Y);
        break;
      case 'Z':
        p.set(t, PauliOp::Z);
        break;
      default:
        throw ParseError("invalid pauli character '" + std::string(1, text[t]) +
                         "' at position " + std::to_string(t));
    }
  }
  return p;
}

std::string format_pauli(const PauliString& p) { return p.to_string(); }

std::size_t anticommuting_index_count(const PauliString& p,
                                      const PauliString& q) {
  check_same_size(p, q);
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  std::size_t count = 0;
  for (std::size_t k = 0; k < px.size(); ++k)
    count += std::popcount((px[k] & qz[k]) ^ (pz[k] & qx[k]));
  return count;
}

bool commutes(const PauliString& p, const PauliString& q) {
  return anticommuting_index_count(p, q) % 2 == 0;
}

WeightedPauliString multiply(const WeightedPauliString& p,
                             const WeightedPauliString& q) {
  check_same_size(p.string, q.string);
  const std::size_t n = p.string.size();
  PauliString out(n);
  int phase = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const auto prod = multiply(p.string.op(t), q.string.op(t));
    out.set(t, prod.result);
    phase += prod.phase;
  }
  return {(p.coefficient * q.coefficient).times_i_pow(phase), std::move(out)};
}

}  // namespace ppart
