#include <cstdio>

int main() {
  std::puts("crossball: subcommands not wired up yet");
  return 1;
}
