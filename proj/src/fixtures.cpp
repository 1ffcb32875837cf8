#include "periodica/fixtures.hpp"

#include <sstream>

#include "periodica/error.hpp"

namespace periodica {

FiniteMagma fixture_m2() {
  FiniteMagma m = function_monoid(2);
  return FiniteMagma(m.size(), m.table(), {"e", "s", "c1", "c2"});
}

FiniteMagma fixture_f3() { return function_monoid(3); }

FiniteMagma fixture_l2() {
  FiniteMagma m = left_zero(2);
  return FiniteMagma(2, m.table(), {"a", "b"});
}

FiniteMagma fixture_s3() { return dihedral(3); }

std::vector<NamedMagma> small_fixtures(std::size_t max_n) {
  std::vector<NamedMagma> all;
  for (std::size_t n = 1; n <= 8; ++n) all.push_back({"Z" + std::to_string(n), cyclic(n)});
  all.push_back({"M2", fixture_m2()});
  all.push_back({"L2", fixture_l2()});
  all.push_back({"L2^1", with_identity(fixture_l2())});
  all.push_back({"R3", right_zero(3)});
  all.push_back({"L3", left_zero(3)});
  all.push_back({"S3", fixture_s3()});
  all.push_back({"D4", dihedral(4)});
  all.push_back({"Z2xZ2", direct_product(cyclic(2), cyclic(2))});
  all.push_back({"Z2xZ4", direct_product(cyclic(2), cyclic(4))});
  all.push_back({"Z2^3", direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))});
  all.push_back({"Z2xM2", direct_product(cyclic(2), fixture_m2())});
  all.push_back({"Zmul6", multiplicative_cyclic(6)});
  all.push_back({"F3", fixture_f3()});
  std::vector<NamedMagma> out;
  for (auto& f : all) {
    if (f.magma.size() <= max_n) out.push_back(std::move(f));
  }
  return out;
}

std::vector<NamedMagma> builder_groups(std::size_t max_order) {
  std::vector<NamedMagma> all;
  for (std::size_t n = 1; n <= 16; ++n) all.push_back({"Z" + std::to_string(n), cyclic(n)});
  for (std::size_t n = 2; n <= 8; ++n) all.push_back({"D" + std::to_string(n), dihedral(n)});
  FiniteMagma z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
  all.push_back({"Z2xZ2", direct_product(z2, z2)});
  all.push_back({"Z2xZ4", direct_product(z2, z4)});
  all.push_back({"Z2^3", direct_product(z2, direct_product(z2, z2))});
  all.push_back({"Z3xZ3", direct_product(z3, z3)});
  all.push_back({"Z2xZ6", direct_product(z2, cyclic(6))});
  all.push_back({"Z4xZ4", direct_product(z4, z4)});
  all.push_back({"Z2xZ8", direct_product(z2, cyclic(8))});
  all.push_back({"Z2^2xZ4", direct_product(direct_product(z2, z2), z4)});
  all.push_back({"Z2^4", direct_product(direct_product(z2, z2), direct_product(z2, z2))});
  all.push_back({"Z2xS3", direct_product(z2, dihedral(3))});
  all.push_back({"Z2xD4", direct_product(z2, dihedral(4))});
  std::vector<NamedMagma> out;
  for (auto& g : all) {
    if (g.magma.size() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::size_t parse_size(std::istream& in, const std::string& spec) {
  std::string tok;
  if (!std::getline(in, tok, ':') || tok.empty() ||
      tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 4) {
    fail(ErrorCode::InvalidInput, "builder \"" + spec + "\" needs a size");
  }
  return std::stoul(tok);
}

FiniteMagma build_from(std::istream& in, const std::string& spec) {
  std::string kind;
  if (!std::getline(in, kind, ':')) fail(ErrorCode::InvalidInput, "empty builder spec");
  if (kind == "m2") return fixture_m2();
  if (kind == "f3") return fixture_f3();
  if (kind == "l2") return fixture_l2();
  if (kind == "s3") return fixture_s3();
  if (kind == "cyclic") return cyclic(parse_size(in, spec));
  if (kind == "zmul") return multiplicative_cyclic(parse_size(in, spec));
  if (kind == "dihedral") return dihedral(parse_size(in, spec));
  if (kind == "left_zero") return left_zero(parse_size(in, spec));
  if (kind == "right_zero") return right_zero(parse_size(in, spec));
  if (kind == "function_monoid") return function_monoid(parse_size(in, spec));
  if (kind == "with_identity") return with_identity(build_from(in, spec));
  if (kind == "product") {
    FiniteMagma a = build_from(in, spec);
    FiniteMagma b = build_from(in, spec);
    return direct_product(a, b);
  }
  fail(ErrorCode::InvalidInput, "unknown builder \"" + kind + "\"");
}

}  // namespace

FiniteMagma build_named(const std::string& spec) {
  std::istringstream in(spec);
  FiniteMagma m = build_from(in, spec);
  std::string rest;
  if (std::getline(in, rest) && !rest.empty()) {
    fail(ErrorCode::InvalidInput, "trailing text in builder spec \"" + spec + "\"");
  }
  return m;
}

}  // namespace periodica
