#include "symarr/space.hpp"

#include "symarr/errors.hpp"

namespace symarr {

SpaceModel SpaceModel::closed_surface(int genus)
{
    if (genus < 0)
        throw ValidationError("closed_surface: genus must be non-negative");
    return SpaceModel(SpaceKind::closed_surface, genus, 0, 0);
}

SpaceModel SpaceModel::punctured_surface(int genus, int punctures)
{
    if (genus < 0)
        throw ValidationError("punctured_surface: genus must be non-negative");
    if (punctures < 1)
        throw ValidationError("punctured_surface: at least one puncture required");
    return SpaceModel(SpaceKind::punctured_surface, genus, punctures, 0);
}

SpaceModel SpaceModel::wedge_of_circles(int circles)
{
    if (circles < 0)
        throw ValidationError("wedge_of_circles: circle count must be non-negative");
    return SpaceModel(SpaceKind::wedge_of_circles, 0, 0, circles);
}

int SpaceModel::exterior_generators() const noexcept
{
    switch (kind_) {
    case SpaceKind::closed_surface: return 2 * genus_;
    case SpaceKind::punctured_surface: return 2 * genus_ + punctures_ - 1;
    case SpaceKind::wedge_of_circles: return circles_;
    }
    return 0;
}

std::int64_t SpaceModel::euler_characteristic() const noexcept
{
    if (kind_ == SpaceKind::closed_surface)
        return 2 - 2 * static_cast<std::int64_t>(genus_);
    return 1 - static_cast<std::int64_t>(exterior_generators());
}

const char* to_string(SpaceKind kind) noexcept
{
    switch (kind) {
    case SpaceKind::closed_surface: return "closed_surface";
    case SpaceKind::punctured_surface: return "punctured_surface";
    case SpaceKind::wedge_of_circles: return "wedge_of_circles";
    }
    return "?";
}

std::string SpaceModel::to_string() const
{
    switch (kind_) {
    case SpaceKind::closed_surface:
        return "closed_surface(g=" + std::to_string(genus_) + ")";
    case SpaceKind::punctured_surface:
        return "punctured_surface(g=" + std::to_string(genus_) + ", k=" + std::to_string(punctures_) + ")";
    case SpaceKind::wedge_of_circles:
        return "wedge_of_circles(m=" + std::to_string(circles_) + ")";
    }
    return "?";
}

} // namespace symarr
