// CLI entry point; subcommands are filled in as the pipelines land.
#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::puts("stw: no subcommands wired yet");
  return 0;
}
