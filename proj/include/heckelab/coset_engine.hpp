#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "heckelab/proj_group.hpp"

namespace heckelab {

// Representatives of K_eps / (K_eps)^-_{g_x}.
struct CosetRepFamily {
  std::int64_t x = 0;
  std::vector<ProjMatrix> reps;
  std::vector<std::string> tags;
};

CosetRepFamily rep_family(const LocalField& f, std::int64_t x);

// k lies in (K_eps)^-_h = K_eps ∩ h K_eps h^{-1}, i.e. h^{-1} k h in K_eps.
bool in_opposite_stabilizer(const ProjMatrix& k, const ProjMatrix& h);
bool pairwise_inequivalent(const CosetRepFamily& family, const ProjMatrix& h);

enum class CosetKind { GxGy, Gxy, Hxy, Other };

struct DoubleCosetName {
  CosetKind kind = CosetKind::Other;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::string witness;  // only for Other

  // Sorted (x, y); for x != y the coset of h_{x,y} is named Gxy.
  static DoubleCosetName make(CosetKind kind, std::int64_t x, std::int64_t y);
  std::string to_string() const;
  auto operator<=>(const DoubleCosetName&) const = default;
};

// K_eps d K_eps together with representatives k of its left cosets k d K_eps.
class DoubleCoset {
 public:
  DoubleCoset(DoubleCosetName name, ProjMatrix representative, std::vector<ProjMatrix> left_reps);

  const DoubleCosetName& name() const { return name_; }
  const ProjMatrix& representative() const { return d_; }
  const std::vector<ProjMatrix>& left_reps() const { return left_reps_; }
  std::size_t left_coset_count() const { return left_reps_.size(); }

  bool contains(const ProjMatrix& g) const;
  // Left cosets k d K_eps pairwise distinct.
  bool left_cosets_distinct() const;

 private:
  DoubleCosetName name_;
  ProjMatrix d_;
  std::vector<ProjMatrix> left_reps_;
  std::vector<ProjMatrix> probes_;  // (k d)^{-1}
  std::vector<GMatrix> body_probes_;
  int body_type_ = 0;
};

// v(det A) - 2 min v(A_ij) for the body A; constant on K_eps double cosets.
int body_type(const ProjMatrix& g);

ProjMatrix named_representative(const LocalField& f, const DoubleCosetName& name);
DoubleCoset build_double_coset(const LocalField& f, const DoubleCosetName& name);

// Thread-safe cache of named double cosets over one field.
class CosetCatalog {
 public:
  explicit CosetCatalog(const LocalField& f) : field_(f) {}

  const LocalField& field() const { return field_; }
  const DoubleCoset& get(const DoubleCosetName& name);
  // Which named double coset contains g_x l g_y; throws Unclassified.
  DoubleCosetName classify_product_coset(std::int64_t x, std::int64_t y, const ProjMatrix& l);

 private:
  LocalField field_;
  std::mutex mutex_;
  std::map<DoubleCosetName, std::unique_ptr<DoubleCoset>> cache_;
};

DoubleCosetName classify_product_coset(const LocalField& f, std::int64_t x, std::int64_t y, const ProjMatrix& l);

// Residue-field criterion: exists a in GL2(F_p) with a21 = a11 x, a22 = a12 y.
bool gxy_hxy_equal(std::int64_t p, std::int64_t x, std::int64_t y);

}  // namespace heckelab
