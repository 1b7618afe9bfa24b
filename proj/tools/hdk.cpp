#include <cstdio>
int main(){ std::puts("hdk: not wired yet"); return 0; }
