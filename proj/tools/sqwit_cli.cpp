#include <cstdio>
int main() { std::puts("sqwit"); return 0; }
