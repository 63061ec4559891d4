#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "regui/regui.hpp"

namespace {

std::shared_ptr<const regui::LayoutSpec> load_fixture() {
  static const auto spec = std::make_shared<const regui::LayoutSpec>(regui::parse_spec(
      regui::read_text_file(std::string(REGUI_SOURCE_DIR) + "/fixtures/teachlcge.regui.json")));
  return spec;
}

void BM_Classify(benchmark::State& state) {
  const auto rules = regui::three_class_rules(0.75, 1.5);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ratio(0.1, 4.0);
  std::vector<double> ratios(1024);
  for (double& r : ratios) r = ratio(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regui::classify(ratios[i++ & 1023], rules).index);
  }
}
BENCHMARK(BM_Classify);

void BM_ResolveFixture(benchmark::State& state) {
  const auto spec = load_fixture();
  const auto window = regui::make_window(1600, 800);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regui::resolve(*spec, window, regui::Anchor::right));
  }
}
BENCHMARK(BM_ResolveFixture);

// Drag-resize stream alternating between classic and portrait windows.
void BM_ControllerResizeStream(benchmark::State& state) {
  regui::ResizeController controller(load_fixture());
  double w = 700;
  for (auto _ : state) {
    w = w > 900 ? 500 : w + 1;
    benchmark::DoNotOptimize(controller.handle(regui::ResizeEvent{w, 800}));
  }
}
BENCHMARK(BM_ControllerResizeStream);

void BM_ValidateFixture(benchmark::State& state) {
  const auto spec = load_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(regui::validate_spec(*spec));
}
BENCHMARK(BM_ValidateFixture);

void BM_ParseFixture(benchmark::State& state) {
  const std::string text =
      regui::read_text_file(std::string(REGUI_SOURCE_DIR) + "/fixtures/teachlcge.regui.json");
  for (auto _ : state) benchmark::DoNotOptimize(regui::parse_spec(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseFixture);

}  // namespace

BENCHMARK_MAIN();
