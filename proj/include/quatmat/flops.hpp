#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace quatmat {

/// Scalar field a matrix operation runs over.
enum class Field { real, cplx, quat };

inline const char* field_name(Field f) {
  switch (f) {
    case Field::real: return "R";
    case Field::cplx: return "C";
    case Field::quat: return "H";
  }
  return "?";
}

/// Count of matrix-level operations of one field and size.
struct MatrixOpCount {
  Field field;
  std::size_t n;  // rows of the result (= order, for square operations)
  std::uint64_t count;
};

/// Tally of real floating-point work plus a ledger of matrix-level
/// inversions and multiplications. Counters are created per call and
/// merged after joins; they are never shared between concurrent tasks.
///
/// All complex and quaternion arithmetic is accounted in real flops via
/// the usual expansions: complex multiply = 4 mults + 2 adds, complex
/// add = 2 adds, quaternion multiply = 16 mults + 12 adds, quaternion
/// add = 4 adds. Sign flips are free.
struct FlopCounter {
  std::uint64_t real_mults = 0;
  std::uint64_t real_adds = 0;
  std::uint64_t real_divs = 0;
  std::vector<MatrixOpCount> inversions;
  std::vector<MatrixOpCount> multiplications;

  void add(std::uint64_t mults, std::uint64_t adds, std::uint64_t divs = 0) {
    real_mults += mults;
    real_adds += adds;
    real_divs += divs;
  }

  void log_inversion(Field f, std::size_t n) { bump(inversions, f, n); }
  void log_multiplication(Field f, std::size_t n) { bump(multiplications, f, n); }

  std::uint64_t inversion_count(Field f, std::size_t n) const {
    return lookup(inversions, f, n);
  }
  std::uint64_t multiplication_count(Field f, std::size_t n) const {
    return lookup(multiplications, f, n);
  }
  std::uint64_t inversion_count(Field f) const { return lookup_field(inversions, f); }
  std::uint64_t multiplication_count(Field f) const {
    return lookup_field(multiplications, f);
  }

  /// Total real flops: one multiplication, addition, or division each count 1.
  std::uint64_t total_real_flops() const { return real_mults + real_adds + real_divs; }

  /// Componentwise sum; used to combine per-task counters after joins.
  void merge(const FlopCounter& other) {
    real_mults += other.real_mults;
    real_adds += other.real_adds;
    real_divs += other.real_divs;
    for (const auto& op : other.inversions) {
      bump(inversions, op.field, op.n, op.count);
    }
    for (const auto& op : other.multiplications) {
      bump(multiplications, op.field, op.n, op.count);
    }
  }

 private:
  static void bump(std::vector<MatrixOpCount>& ops, Field f, std::size_t n,
                   std::uint64_t by = 1) {
    for (auto& op : ops) {
      if (op.field == f && op.n == n) {
        op.count += by;
        return;
      }
    }
    ops.push_back({f, n, by});
  }

  static std::uint64_t lookup(const std::vector<MatrixOpCount>& ops, Field f,
                              std::size_t n) {
    for (const auto& op : ops) {
      if (op.field == f && op.n == n) return op.count;
    }
    return 0;
  }

  static std::uint64_t lookup_field(const std::vector<MatrixOpCount>& ops, Field f) {
    std::uint64_t total = 0;
    for (const auto& op : ops) {
      if (op.field == f) total += op.count;
    }
    return total;
  }
};

}  // namespace quatmat
