#include <gtest/gtest.h>

#include <iostream>

#include "gen.hpp"

int main(int argc, char** argv) {
  testing::InitGoogleTest(&argc, argv);
  lgdual::testgen::global_seed() = lgdual::testgen::take_seed(argc, argv, lgdual::testgen::global_seed());
  std::cout << "seed " << lgdual::testgen::global_seed() << "\n";
  return RUN_ALL_TESTS();
}
