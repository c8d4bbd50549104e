#pragma once

// Irreducible real representations of products of simple groups with at most
// one circle factor acting by scalars.
//
// Spec strings:
//
//   spec     := factor {'*' factor} [':' field '-' presentation]
//   factor   := 'U1(' integer ')' | typed weight such as 'A5[0,0,1,0,0]'
//   field    := 'R' | 'C' | 'H'
//   presentation := 'real_form' | 'realification' | 'intrinsically_real'
//
// When the suffix is omitted it is inferred from the factor types.

#include <string>
#include <string_view>
#include <vector>

#include "lowcohom/liecore.hpp"
#include "lowcohom/numslice.hpp"

namespace lowcohom {

struct GroupSpec {
  std::vector<SimpleGroupType> simple_factors;
  int torus_rank = 0;

  int dim() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string to_string(const GroupSpec& g);

enum class TensorField { R, C, H };
enum class Presentation { real_form, realification, intrinsically_real };

struct IrrepSpec {
  std::vector<TypedWeight> factors;
  std::vector<int> u1_charges;
  TensorField tensor_field = TensorField::R;
  Presentation presentation = Presentation::real_form;
  std::string effective_kernel_note;

  GroupSpec group() const;
  bool has_charge() const;
  friend bool operator==(const IrrepSpec&, const IrrepSpec&) = default;
  friend auto operator<=>(const IrrepSpec& a, const IrrepSpec& b) {
    if (auto c = a.factors <=> b.factors; c != 0) return c;
    return a.u1_charges <=> b.u1_charges;
  }
};

struct RealRep {
  std::int64_t real_degree = 0;
  FSType fs = FSType::real;
  int effective_dim_group = 0;
};

enum class RealCase { case_a_real, case_b_quaternionic, case_c_complex };
enum class Route { real_tensor, quaternionic_tensor, complex_realification, simple };

std::string to_string(TensorField f);
std::string to_string(Presentation p);
std::string to_string(RealCase c);
std::string to_string(Route r);

FSType tensor_type(FSType a, FSType b);

/// Type of the complex representation ⊗ factors ⊗ characters.
FSType complex_type(const IrrepSpec& spec);
std::int64_t complex_degree(const IrrepSpec& spec);

RealCase classify_real_irrep(const IrrepSpec& spec);
std::int64_t real_degree(const IrrepSpec& spec);
Route realization_route(const IrrepSpec& spec);
RealRep real_rep(const IrrepSpec& spec);

/// Throws std::invalid_argument when field/presentation contradict the types.
void validate(const IrrepSpec& spec);

/// Canonical factor weights, low-rank normal forms (B2 -> C2, D3 -> A3),
/// sorted factors, charges normalised to 1, inferred field and presentation.
IrrepSpec normalize(IrrepSpec spec);

IrrepSpec parse_spec(std::string_view text);
std::string format_spec(const IrrepSpec& spec);

std::string spec_to_json(const IrrepSpec& spec);
IrrepSpec spec_from_json(std::string_view json);

/// Explicit orthogonal representation for the numeric oracle. Throws
/// UnsupportedConstruction for exceptional factors.
LinearRep realize(const IrrepSpec& spec);

}  // namespace lowcohom
