#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimer/errors.hpp"

namespace dimer {

struct Arrow {
  int id = 0;
  int tail = 0;
  int head = 0;
  std::array<int, 2> wind{0, 0};
  bool operator==(const Arrow&) const = default;
};

struct Face {
  int sign = 1;                // +1 anticlockwise, -1 clockwise
  std::vector<int> boundary;   // arrow ids, head of each = tail of the next
  bool operator==(const Face&) const = default;
};

// Vertex 0 is the distinguished vertex.  Positions and period are only used
// for drawing.
struct DimerModel {
  int num_vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Face> faces;
  std::optional<std::vector<std::array<double, 2>>> positions;
  std::optional<std::array<double, 2>> period;
  std::optional<std::array<long, 2>> anchor;

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  bool operator==(const DimerModel&) const = default;
};

struct FTermRelation {
  int arrow = 0;
  std::vector<int> plus_path;
  std::vector<int> minus_path;
};

struct WeakStep {
  int arrow = 0;
  int exponent = 1;  // +1 along the arrow, -1 against it
  bool operator==(const WeakStep&) const = default;
};

struct WeakPath {
  std::vector<WeakStep> steps;
  bool operator==(const WeakPath&) const = default;
};

// Arrows a_1..a_m leave i, b_1..b_m enter i, and b_j sits between a_j and
// a_{j+1}: the corner (b_j, a_{j+1}) lies on a +1 face and (b_j, a_j) on a
// -1 face.
struct Rotation {
  int vertex = 0;
  std::vector<int> out;
  std::vector<int> in;
  int m() const { return static_cast<int>(out.size()); }
};

DimerModel parse_dimer(std::string_view text);
std::string serialize_dimer(const DimerModel& model);
DimerModel load_dimer(const std::string& path);

std::vector<std::string> validate_dimer(const DimerModel& model);

std::vector<FTermRelation> f_term_relations(const DimerModel& model);

Rotation vertex_rotation(const DimerModel& model, int i);

// Index of the face with the given sign containing arrow a.
int face_of(const DimerModel& model, int a, int sign);

// Arrows of the face after position k, in traversal order.  For a corner
// (b, a) this is the complementary path from head(a) back to tail(b).
std::vector<int> face_path_after(const Face& face, std::size_t k, std::size_t count);

std::optional<int> weak_path_end(const DimerModel& model, const WeakPath& p, int start);
std::array<int, 2> weak_path_winding(const DimerModel& model, const WeakPath& p);
WeakPath inverse(const WeakPath& p);
WeakPath concat(const WeakPath& p, const WeakPath& q);
WeakPath forward_path(const std::vector<int>& arrows);

// Reverse every arrow, negate windings and flip face signs.
DimerModel opposite_dimer(const DimerModel& model);

}  // namespace dimer
