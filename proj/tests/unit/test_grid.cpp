#include <limits>

#include "covosc/errors.hpp"
#include "covosc/grid.hpp"
#include "doctest.h"

TEST_SUITE_BEGIN("grid");

TEST_CASE("lattice endpoints and spacing") {
  covosc::GridSpec g;
  g.z_min = -4.0;
  g.z_max = 4.0;
  g.n_z = 81;
  g.validate();
  CHECK(g.z(0) == -4.0);
  CHECK(g.z(80) == 4.0);
  CHECK(g.z(40) == 0.0);
  CHECK(g.t(0) == g.t_min);
}

TEST_CASE("validation") {
  covosc::GridSpec g;
  g.z_min = 1.0;
  g.z_max = 1.0;
  CHECK_THROWS_AS(g.validate(), covosc::DomainError);

  covosc::GridSpec few;
  few.n_t = 1;
  CHECK_THROWS_AS(few.validate(), covosc::DomainError);

  covosc::GridSpec inf;
  inf.t_max = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(inf.validate(), covosc::DomainError);
}

TEST_SUITE_END();
