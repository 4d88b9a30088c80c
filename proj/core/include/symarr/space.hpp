#pragma once

#include <cstdint>
#include <string>

namespace symarr {

enum class SpaceKind { closed_surface, punctured_surface, wedge_of_circles };

/// Ambient space X whose symmetric products carry the arrangement.
///
/// Closed orientable surfaces M_g, punctured surfaces M_{g,k} and wedges of
/// m circles. A punctured surface is homotopy equivalent to the wedge of
/// 2g + k - 1 circles, and every homology provider treats it that way.
class SpaceModel {
public:
    static SpaceModel closed_surface(int genus);
    static SpaceModel punctured_surface(int genus, int punctures);
    static SpaceModel wedge_of_circles(int circles);

    SpaceKind kind() const noexcept { return kind_; }
    int genus() const noexcept { return genus_; }
    int punctures() const noexcept { return punctures_; }

    /// Number of exterior generators of H_*(SP^infinity(X); Q):
    /// 2g for a closed surface, 2g + k - 1 for a punctured one, m for a wedge.
    int exterior_generators() const noexcept;

    /// Whether H_*(SP^infinity(X); Q) has the polynomial class in degree 2.
    bool has_polynomial_class() const noexcept { return kind_ == SpaceKind::closed_surface; }

    /// chi(X).
    std::int64_t euler_characteristic() const noexcept;

    std::string to_string() const;

    friend bool operator==(const SpaceModel&, const SpaceModel&) = default;

private:
    SpaceModel(SpaceKind kind, int genus, int punctures, int circles)
        : kind_(kind), genus_(genus), punctures_(punctures), circles_(circles) {}

    SpaceKind kind_;
    int genus_ = 0;
    int punctures_ = 0;
    int circles_ = 0;
};

const char* to_string(SpaceKind kind) noexcept;

} // namespace symarr
