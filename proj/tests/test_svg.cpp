#include <doctest.h>

#include <map>
#include <string>

#include "fcmlab/datagen.hpp"
#include "fcmlab/errors.hpp"
#include "fcmlab/svg.hpp"

#include "support/helpers.hpp"

using namespace fcmlab;

namespace {

KSweepResult ruspini_sweep(int k_min, int k_max) {
    FcmConfig base;
    base.seed = 1;
    return sweep(ruspini_fixture(), base, k_min, k_max);
}

KSweepResult single_point_sweep() {
    KSweepResult out;
    out.k_min = out.k_max = 3;
    KFitRecord rec;
    rec.inertia = {2.0, 8.0, 10.0};
    out.records.emplace(3, rec);
    return out;
}

} // namespace

TEST_CASE("visual tsfd svg: well-formed, one dashed ray per K, labeled points") {
    testutil::TempDir dir("svg");
    const KSweepResult sw = ruspini_sweep(2, 7);
    const auto path = dir.path() / "visual.svg";
    emit_visual_tsfd_svg(sw, path, "ruspini");
    const std::string text = testutil::read_file(path);

    std::string why;
    CHECK_MESSAGE(testutil::xml_well_formed(text, &why), why);
    CHECK(testutil::count_occurrences(text, "stroke-dasharray") ==
          sw.records.size());
    CHECK(testutil::count_occurrences(text, "<circle") == sw.records.size());
    CHECK(text.find("<polyline") != std::string::npos);
    CHECK(text.find(">FI<") != std::string::npos);
    CHECK(text.find(">FB<") != std::string::npos);
    for (int k = 2; k <= 7; ++k) {
        CHECK(text.find(">" + std::to_string(k) + "<") != std::string::npos);
    }
}

TEST_CASE("visual tsfd svg: single-point sweep still draws ray and diagonal") {
    testutil::TempDir dir("svg");
    const auto path = dir.path() / "single.svg";
    emit_visual_tsfd_svg(single_point_sweep(), path);
    const std::string text = testutil::read_file(path);
    std::string why;
    CHECK_MESSAGE(testutil::xml_well_formed(text, &why), why);
    CHECK(testutil::count_occurrences(text, "stroke-dasharray") == 1);
    CHECK(testutil::count_occurrences(text, "<circle") == 1);
    // The diagonal plus the two axes are the only solid lines.
    CHECK(testutil::count_occurrences(text, "<line") == 4);
    CHECK(text.find("<polyline") == std::string::npos);
}

TEST_CASE("elbow svg: two points draw no highlight, four concave points do") {
    testutil::TempDir dir("svg");

    const auto two = dir.path() / "two.svg";
    emit_elbow_svg({{2, 0.5}, {3, 0.8}}, "TSFD", two);
    const std::string two_text = testutil::read_file(two);
    std::string why;
    CHECK_MESSAGE(testutil::xml_well_formed(two_text, &why), why);
    CHECK(two_text.find("elbow") == std::string::npos);

    const auto four = dir.path() / "four.svg";
    const std::map<int, double> series{{2, 0.5}, {3, 0.8}, {4, 0.9}, {5, 0.95}};
    emit_elbow_svg(series, "TSFD", four);
    const std::string four_text = testutil::read_file(four);
    CHECK_MESSAGE(testutil::xml_well_formed(four_text, &why), why);
    CHECK(four_text.find("elbow K=3") != std::string::npos);
    // Axis labels.
    CHECK(four_text.find(">K<") != std::string::npos);
    CHECK(four_text.find(">TSFD<") != std::string::npos);
}

TEST_CASE("svg writers report unwritable paths") {
    CHECK_THROWS_AS(emit_visual_tsfd_svg(single_point_sweep(),
                                         "/nonexistent_dir/x.svg"),
                    IoError);
    CHECK_THROWS_AS(emit_elbow_svg({{2, 1.0}, {3, 2.0}}, "TSFD",
                                   "/nonexistent_dir/x.svg"),
                    IoError);
}
