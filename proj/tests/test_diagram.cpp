#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

#include "dvtraffic/diagram.hpp"
#include "dvtraffic/errors.hpp"

using namespace dvtraffic;

namespace {

constexpr double pi = std::numbers::pi;

FundamentalDiagram sine_diagram() {
  return make_diagram(DiagramKind::custom,
                      CustomDiagram{[](double r) { return std::sin(pi * r) / pi; },
                                    [](double r) { return std::cos(pi * r); },
                                    std::nullopt, "sine"});
}

// F(rho) = rho (1 - rho^2), critical density 1/sqrt(3).
FundamentalDiagram cubic_diagram() {
  return make_diagram(DiagramKind::custom,
                      CustomDiagram{[](double r) { return r * (1.0 - r * r); },
                                    [](double r) { return 1.0 - 3.0 * r * r; },
                                    std::nullopt, "cubic"});
}

// Sign change of `f` located by a dense scan; independent of bisection.
double scan_root(const std::function<double(double)>& f, double lo, double hi,
                 int n = 200000) {
  double prev = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if ((prev <= 0.0) != (v <= 0.0)) return x - 0.5 * (hi - lo) / n;
    prev = v;
  }
  return std::nan("");
}

}  // namespace

TEST(Diagram, LighthillWhithamValues) {
  const FundamentalDiagram d = lighthill_whitham();
  EXPECT_DOUBLE_EQ(d.eval(0.3), 0.21);
  EXPECT_DOUBLE_EQ(d(0.3), 0.21);
  EXPECT_DOUBLE_EQ(d.rho_star(), 0.5);
  EXPECT_DOUBLE_EQ(d.max_flux(), 0.25);
  EXPECT_DOUBLE_EQ(d.deriv(0.2), 0.6);
  EXPECT_EQ(d.kind(), DiagramKind::lighthill_whitham);
  EXPECT_TRUE(d.is_concave());
}

TEST(Diagram, LighthillWhithamTau) {
  const FundamentalDiagram d = lighthill_whitham();
  EXPECT_NEAR(tau(d, 0.3), 0.7, 1e-15);
  EXPECT_DOUBLE_EQ(tau(d, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(tau(d, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(tau(d, 1.0), 0.0);
}

TEST(Diagram, SineCriticalDensityByBisection) {
  const FundamentalDiagram d = sine_diagram();
  const double oracle = scan_root([](double r) { return std::cos(pi * r); }, 0.0, 1.0);
  EXPECT_NEAR(d.rho_star(), oracle, 1e-5);
  EXPECT_NEAR(d.rho_star(), 0.5, 1e-10);
  EXPECT_NEAR(d.max_flux(), 1.0 / pi, 1e-12);
}

TEST(Diagram, CustomTauMatchesGridScan) {
  const FundamentalDiagram d = cubic_diagram();
  EXPECT_NEAR(d.rho_star(), 1.0 / std::sqrt(3.0), 1e-10);
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double t = d.tau(r);
    const double lo = r < d.rho_star() ? d.rho_star() : 0.0;
    const double hi = r < d.rho_star() ? 1.0 : d.rho_star();
    const double oracle = scan_root([&](double x) { return d(x) - d(r); }, lo, hi);
    EXPECT_NEAR(t, oracle, 1e-5) << "rho = " << r;
    EXPECT_NEAR(d(t), d(r), 1e-10);
    EXPECT_TRUE((r - d.rho_star()) * (t - d.rho_star()) <= 0.0);
  }
}

TEST(Diagram, RejectsNonzeroEndpoints) {
  EXPECT_THROW(make_diagram(DiagramKind::custom,
                            CustomDiagram{[](double r) { return 0.1 + r * (1 - r); },
                                          [](double r) { return 1 - 2 * r; },
                                          std::nullopt, "shifted"}),
               DiagramError);
  EXPECT_THROW(make_diagram(DiagramKind::custom,
                            CustomDiagram{[](double r) { return r * (1.2 - r); },
                                          [](double r) { return 1.2 - 2 * r; },
                                          std::nullopt, "open"}),
               DiagramError);
}

TEST(Diagram, RejectsTwoHumps) {
  auto f = [](double r) { return r * (1 - r) * (1 + 0.9 * std::sin(6 * pi * r)); };
  auto df = [](double r) {
    return (1 - 2 * r) * (1 + 0.9 * std::sin(6 * pi * r)) +
           r * (1 - r) * 0.9 * 6 * pi * std::cos(6 * pi * r);
  };
  EXPECT_THROW(make_diagram(DiagramKind::custom, CustomDiagram{f, df, std::nullopt, "humps"}),
               DiagramError);
}

TEST(Diagram, RejectsMissingCustomFunctions) {
  EXPECT_THROW(make_diagram(DiagramKind::custom), DiagramError);
}

TEST(Diagram, ConcavityCheck) {
  EXPECT_TRUE(cubic_diagram().is_concave());
  // u = rho - 1/2: F = (1/4 - u^2)(1 - 2u^2), F'' = -3 + 24u^2 > 0 near the ends.
  const FundamentalDiagram flattened = make_diagram(
      DiagramKind::custom,
      CustomDiagram{[](double r) {
                      const double u = r - 0.5;
                      return (0.25 - u * u) * (1 - 2 * u * u);
                    },
                    [](double r) {
                      const double u = r - 0.5;
                      return -3 * u + 8 * u * u * u;
                    },
                    std::nullopt, "flattened"});
  EXPECT_NEAR(flattened.rho_star(), 0.5, 1e-10);
  EXPECT_FALSE(flattened.is_concave());
}

TEST(Diagram, SamplesReproduceLighthillWhitham) {
  std::vector<double> rho, flux;
  for (int i = 0; i <= 100; ++i) {
    rho.push_back(i / 100.0);
    flux.push_back(rho.back() * (1 - rho.back()));
  }
  const FundamentalDiagram d = diagram_from_samples(rho, flux);
  EXPECT_EQ(d.kind(), DiagramKind::custom);
  EXPECT_NEAR(d.rho_star(), 0.5, 1e-6);
  for (double r = 0.005; r < 1.0; r += 0.01) {
    EXPECT_NEAR(d(r), r * (1 - r), 1e-4);
  }
}

TEST(Diagram, LoadsCsvWithHeader) {
  const auto path = std::filesystem::temp_directory_path() / "dvtraffic_diagram_test.csv";
  {
    std::ofstream out(path);
    out << "rho,F\n";
    for (int i = 0; i <= 50; ++i) {
      const double r = i / 50.0;
      out << r << ',' << r * (1 - r) << '\n';
    }
  }
  const FundamentalDiagram d = load_diagram_csv(path.string());
  EXPECT_NEAR(d(0.3), 0.21, 1e-3);
  std::filesystem::remove(path);
  EXPECT_THROW(load_diagram_csv(path.string()), DiagramError);
}
