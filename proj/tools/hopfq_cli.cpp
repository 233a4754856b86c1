#include <iostream>
int main() { std::cout << "hopfq: cli not wired yet\n"; return 2; }
