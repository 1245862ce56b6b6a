#include <exception>
#include <iostream>
#include <string>

#include "irfield/goldens.hpp"

// Regenerates the pinned csv outputs under tests/golden. Run from anywhere:
//   irfield-goldens <golden-dir> [name-prefix]
int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: irfield-goldens <golden-dir> [name-prefix]\n";
    return 2;
  }
  const std::string dir = argv[1];
  const std::string filter = argc == 3 ? argv[2] : "";
  try {
    const int written = irfield::regenerate_goldens(dir, filter);
    std::cout << "wrote " << written << " golden file" << (written == 1 ? "" : "s") << " to "
              << dir << "\n";
    return written > 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
