// Placeholder; the real CLI lands once the library is complete.
int main() { return 0; }
