#include "spinlab/boolean_function.hpp"

#include <stdexcept>

namespace spinlab {

namespace {

// Truth tables of f1..f8, outputs listed for inputs 00, 01, 10, 11.
constexpr std::array<std::array<int, 4>, 8> kLabeledTables = {{
    {0, 0, 0, 0},  // f1
    {1, 1, 1, 1},  // f2
    {0, 0, 1, 1},  // f3
    {1, 1, 0, 0},  // f4
    {1, 0, 1, 0},  // f5
    {0, 1, 0, 1},  // f6
    {1, 0, 0, 1},  // f7
    {0, 1, 1, 0},  // f8
}};

}  // namespace

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant:
      return "constant";
    case FunctionClass::Balanced:
      return "balanced";
    case FunctionClass::Neither:
      return "neither";
  }
  return "?";
}

BooleanFunction::BooleanFunction(std::array<int, 4> outputs)
    : table_(outputs) {
  for (int v : table_) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("BooleanFunction: outputs must be 0 or 1");
    }
  }
}

BooleanFunction BooleanFunction::labeled(int k) {
  if (k < 1 || k > 8) {
    throw std::out_of_range("BooleanFunction: label index must be 1..8");
  }
  return BooleanFunction(kLabeledTables[k - 1]);
}

const std::array<BooleanFunction, 8>& BooleanFunction::labeled_eight() {
  static const std::array<BooleanFunction, 8> all = {
      labeled(1), labeled(2), labeled(3), labeled(4),
      labeled(5), labeled(6), labeled(7), labeled(8)};
  return all;
}

std::vector<BooleanFunction> BooleanFunction::all_two_bit() {
  std::vector<BooleanFunction> out;
  out.reserve(16);
  for (int code = 0; code < 16; ++code) {
    out.push_back(BooleanFunction({(code >> 3) & 1, (code >> 2) & 1,
                                   (code >> 1) & 1, code & 1}));
  }
  return out;
}

BooleanFunction BooleanFunction::parse(const std::string& text) {
  if (text.size() == 2 && (text[0] == 'f' || text[0] == 'F') &&
      text[1] >= '1' && text[1] <= '8') {
    return labeled(text[1] - '0');
  }
  std::string bits = text;
  if (bits.size() == 5 && (bits[0] == 't' || bits[0] == 'T')) bits = bits.substr(1);
  if (bits.size() == 4) {
    std::array<int, 4> outputs{};
    for (int m = 0; m < 4; ++m) {
      if (bits[m] != '0' && bits[m] != '1') {
        throw std::invalid_argument("BooleanFunction: bad truth table '" +
                                    text + "'");
      }
      outputs[m] = bits[m] - '0';
    }
    return BooleanFunction(outputs);
  }
  throw std::invalid_argument(
      "BooleanFunction: expected f1..f8 or a 4-bit truth table, got '" + text +
      "'");
}

int BooleanFunction::operator()(int i, int j) const {
  if (i < 0 || i > 1 || j < 0 || j > 1) {
    throw std::out_of_range("BooleanFunction: input bits must be 0 or 1");
  }
  return table_[2 * i + j];
}

int BooleanFunction::output(int m) const {
  if (m < 0 || m > 3) {
    throw std::out_of_range("BooleanFunction: block index must be 0..3");
  }
  return table_[m];
}

std::optional<int> BooleanFunction::label() const {
  for (int k = 1; k <= 8; ++k) {
    if (table_ == kLabeledTables[k - 1]) return k;
  }
  return std::nullopt;
}

std::string BooleanFunction::name() const {
  if (auto k = label()) return "f" + std::to_string(*k);
  std::string out = "t";
  for (int v : table_) out += char('0' + v);
  return out;
}

FunctionClass classify(const BooleanFunction& f) {
  int zeros = 0;
  for (int m = 0; m < 4; ++m) zeros += (f.output(m) == 0);
  if (zeros == 0 || zeros == 4) return FunctionClass::Constant;
  if (zeros == 2) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

}  // namespace spinlab
