// Reads an arrangement file (default: the built-in Ceva(3) arrangement),
// finds its multinets and prints the full analysis.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "mnet/mnet.hpp"

int main(int argc, char** argv) {
  try {
    mnet::MultiArrangement arr = mnet::corpus::ceva(3);
    std::string source = "ceva:3";
    if (argc > 1) {
      std::ifstream f(argv[1]);
      if (!f) {
        std::cerr << "cannot read " << argv[1] << "\n";
        return 1;
      }
      arr = mnet::parse_arrangement(std::string(std::istreambuf_iterator<char>(f), {}));
      source = argv[1];
    }
    std::cout << mnet::to_human(mnet::analyze(arr, source));
  } catch (const mnet::ParseError& e) {
    std::cerr << "line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
