#include <iostream>
int main() { std::cout << "evp cli placeholder\n"; return 0; }
