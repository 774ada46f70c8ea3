// Pool 30 samples into 25 tests with the affine plane of order 5 and
// recover up to four positives from the test results alone.

#include <iostream>
#include <vector>

#include "disjunct/disjunct.hpp"

int main() {
    using namespace disjunct;

    const auto scheme = affine_plane_matrix(5);
    std::cout << "scheme: " << scheme.rows() << " tests for " << scheme.cols() << " samples, "
              << max_disjunct_order(scheme) << "-disjunct\n";

    const std::vector<ColumnId> positives{3, 11, 17, 28};
    const auto results = outcomes(scheme, positives);
    std::cout << "outcomes: " << results.str() << '\n';

    std::cout << "decoded positives:";
    for (auto j : naive_decode(scheme, results)) std::cout << ' ' << j;
    std::cout << '\n';

    const auto b = lower_bounds(4);
    std::cout << "any 4-disjunct scheme beating individual testing needs at least " << b.best()
              << " tests; this one uses " << scheme.rows() << '\n';
}
