// Rewrites goldens/ from the current engine. Run deliberately after an
// intended output change, then review the diff before committing.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "regui/goldens.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: regui_regen_goldens <project-root>\n";
    return 3;
  }
  const std::filesystem::path root = argv[1];
  try {
    for (const regui::GoldenCase& golden : regui::enumerate_goldens()) {
      const std::filesystem::path target = root / golden.expected_path;
      std::filesystem::create_directories(target.parent_path());
      std::ofstream(target, std::ios::binary) << regui::render_golden(golden, root);
      std::cerr << "wrote " << golden.expected_path.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "regui_regen_goldens: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
