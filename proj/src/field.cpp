#include "octodfm/field.hpp"

#include "octodfm/aggregation.hpp"

#include <array>
#include <limits>

namespace octodfm {

double fit_ratio(const Vec3& part_extent, const Vec3& envelope) {
  std::array<int, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int a = 0; a < 3; ++a) worst = std::max(worst, part_extent[perm[a]] / envelope[a]);
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return clamp01(best);
}

double LocalIndexField::max() const { return local_max(values); }

double LocalIndexField::mean() const { return local_mean(values, volumes); }

}  // namespace octodfm
