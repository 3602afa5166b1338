#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spinlab {

enum class FunctionClass { Constant, Balanced, Neither };

std::string to_string(FunctionClass c);

/// Truth table of a two-bit boolean function f : {0,1}^2 -> {0,1}.
/// Outputs are indexed by m = 2i + j for input (i, j), i.e. in the order
/// 00, 01, 10, 11. The eight constant or balanced functions carry the
/// conventional labels f1..f8.
class BooleanFunction {
 public:
  /// Outputs in input order 00, 01, 10, 11; entries must be 0 or 1.
  explicit BooleanFunction(std::array<int, 4> outputs);

  /// Labeled function fk, k = 1..8.
  static BooleanFunction labeled(int k);

  /// f1..f8 in label order.
  static const std::array<BooleanFunction, 8>& labeled_eight();

  /// All 16 two-bit functions.
  static std::vector<BooleanFunction> all_two_bit();

  /// Parses "f1".."f8" or a 4-character bit string like "1100"
  /// (outputs for inputs 00, 01, 10, 11).
  static BooleanFunction parse(const std::string& text);

  int operator()(int i, int j) const;
  int output(int m) const;  // m = 2i + j
  const std::array<int, 4>& table() const { return table_; }

  /// Label index 1..8 when the table matches a labeled function.
  std::optional<int> label() const;
  /// "f4" for labeled tables, "t1100" otherwise.
  std::string name() const;

  bool operator==(const BooleanFunction& other) const = default;

 private:
  std::array<int, 4> table_{};
};

/// Constant iff all outputs equal; balanced iff exactly two outputs are 0;
/// neither otherwise.
FunctionClass classify(const BooleanFunction& f);

}  // namespace spinlab
