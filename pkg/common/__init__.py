# Common modules shared by the moment-angle toolkit
