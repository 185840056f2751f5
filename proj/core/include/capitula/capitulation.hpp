#pragma once

#include <optional>

#include "capitula/ambiguous.hpp"

namespace capitula {

enum class Extension { K1, K2, K3, Genus };

// Capitulation kernel of one unramified quadratic extension: size from the
// unit-index formula, generators exactly as the governing statement writes
// them, plus a reduced echelon basis for stable comparison. For the genus
// field the size is |Am_s|, reported as the proven lower bound.
struct KernelReport {
  Extension target;
  int size = 0;
  std::vector<ClassWord> generators;
  std::vector<ClassWord> canonical;
  TowerCase tower_case;  // meaningful for K1, K2, K3
  bool size_is_lower_bound = false;
};

KernelReport kernel_K1(const FieldContext& ctx);
KernelReport kernel_K2(const FieldContext& ctx);
KernelReport kernel_K3(const FieldContext& ctx);
KernelReport genus_kernel(const FieldContext& ctx);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // counterexample word or mismatch description
};

struct VerificationRecord {
  bool pass = true;
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

// The capitulation statements and unit-index bookkeeping as F2 checks:
// each ker J_K inside Am_s with independent generators and size
// 2 * [E_k : N(E_K)], |Am_s| matching the ambiguous-number formula,
// the universal relation, and Am_s covered by the three kernels together.
VerificationRecord verify_main_theorem(const FieldContext& ctx);

// The (2,2,2) application: present when at least two of (p1/p2), (2/p1),
// (2/p2) equal -1. Kernels then follow the elementary type analysis and the
// genus kernel is all of Am_s = C_{k,2}.
struct Type222Report {
  int q = 0;  // q(K3+/Q)
  KernelReport ker_K1, ker_K2, ker_K3, ker_genus;
};

std::optional<Type222Report> application_222(const FieldContext& ctx);

bool type_222_criterion(const PrimePair& pair);

}  // namespace capitula
